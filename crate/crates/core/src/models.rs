//! Builders for the specific algebras: surface cohomology, Arnold and
//! punctured-plane algebras, the Totaro quotients of products of surfaces,
//! the genus-two quotient B, and the mod-2 model for the sphere.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{diagonal_class, duality_data, tensor_square, GradedAlgebra};
use crate::error::{Error, Result};
use crate::field::{Field, Gf2, Rational};
use crate::linalg::{Subspace, Vector};
use crate::monomial::{Element, GeneratorSet, Monomial};
use crate::presentation::{quotient_with, AlgebraPresentation, Quotient, QuotientOptions};

/// Genus, number of punctures and number of points of a configuration space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceSpec {
    pub genus: u32,
    pub punctures: u32,
    pub points: u32,
}

impl SurfaceSpec {
    pub fn new(genus: u32, punctures: u32, points: u32) -> Result<Self> {
        if points == 0 {
            return Err(Error::Rejected("a configuration space needs at least one point".into()));
        }
        Ok(SurfaceSpec { genus, punctures, points })
    }

    pub fn closed(genus: u32, points: u32) -> Result<Self> {
        Self::new(genus, 0, points)
    }
}

/// Local generator names of H¹(Σ_g).
pub fn surface_generator_names(g: u32) -> Vec<String> {
    match g {
        0 => vec!["w".into()],
        1 => vec!["a".into(), "b".into()],
        2 => ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect(),
        _ => (1..=g).flat_map(|p| [format!("a({p})"), format!("b({p})")]).collect(),
    }
}

/// H*(Σ_g): for g ≥ 1, degree-one generators a(p), b(p) with a(p)b(p) = ω for
/// every p and all other products of generators zero; for g = 0, ω in degree 2.
pub fn surface_cohomology<F: Field>(g: u32) -> Result<AlgebraPresentation<F>> {
    let names = surface_generator_names(g);
    if g == 0 {
        let gens = GeneratorSet::new([(names[0].clone(), 2)])?;
        let w2 = Element::monomial(Monomial::from_factors(vec![(0, 2)]), F::one());
        return AlgebraPresentation::new("H*(S^2)", gens, vec![w2], None);
    }
    let k = names.len();
    let gens = GeneratorSet::new(names.iter().map(|n| (n.clone(), 1)))?;
    let gen = |i: usize| Element::<F>::generator(i);
    let mut relations = Vec::new();
    for u in 0..k {
        if F::KIND.characteristic() == 2 {
            relations.push(gens.multiply(&gen(u), &gen(u))?);
        }
        for v in u + 1..k {
            let symplectic_pair = u % 2 == 0 && v == u + 1;
            if !symplectic_pair {
                relations.push(gens.multiply(&gen(u), &gen(v))?);
            }
        }
    }
    for p in 0..g as usize {
        for q in p + 1..g as usize {
            let wp = gens.multiply(&gen(2 * p), &gen(2 * p + 1))?;
            let wq = gens.multiply(&gen(2 * q), &gen(2 * q + 1))?;
            relations.push(wp.sub(&wq));
        }
    }
    let name = if g == 1 { "H*(T)".to_string() } else { format!("H*(Σ_{g})") };
    AlgebraPresentation::new(name, gens, relations, None)
}

/// The cohomology of a closed surface with its orientation class.
pub struct SurfaceModel<F> {
    pub genus: u32,
    pub quotient: Quotient<F>,
    /// ω: the normal form of a(1)b(1), or the degree-two generator for g = 0.
    pub omega: Vector<F>,
}

pub fn surface_model<F: Field>(g: u32) -> Result<SurfaceModel<F>> {
    let p = surface_cohomology::<F>(g)?;
    let quotient = quotient_with(&p, QuotientOptions::default())?;
    let omega_free = if g == 0 { Element::generator(0) } else { p.word(&[&surface_generator_names(g)[0], &surface_generator_names(g)[1]])? };
    let omega = quotient.normal_form(&omega_free)?;
    Ok(SurfaceModel { genus: g, quotient, omega })
}

/// The diagonal class of a closed surface as a list of
/// `(left normal monomial, right normal monomial, coefficient)`.
pub fn surface_diagonal<F: Field>(model: &SurfaceModel<F>) -> Result<Vec<(Monomial, Monomial, F)>> {
    let a = model.quotient.algebra();
    let aa = tensor_square(a);
    let data = duality_data(a, 2, &model.omega)?;
    let delta = diagonal_class(&aa, &data)?;
    let monos = model.quotient.basis_monomials();
    delta
        .iter()
        .map(|(k, c)| {
            let (i, j) = aa.tensor_split(*k)?;
            Ok((monos[i].clone(), monos[j].clone(), c.clone()))
        })
        .collect()
}

/// Per-slot renaming of a base presentation into `n` tensor factors.
/// Slot `s` (1-based) uses generator ids `(s-1)*k .. s*k`.
#[derive(Clone, Debug)]
pub struct ProductPresentation<F> {
    pub presentation: AlgebraPresentation<F>,
    pub local_generators: usize,
    pub slots: usize,
}

impl<F: Field> ProductPresentation<F> {
    /// Moves a monomial of the base algebra into slot `s`.
    pub fn place(&self, m: &Monomial, slot: usize) -> Monomial {
        let off = ((slot - 1) * self.local_generators) as u32;
        Monomial::from_factors(m.factors().iter().map(|&(g, e)| (g + off, e)).collect())
    }

    pub fn slot_generator(&self, local: usize, slot: usize) -> Element<F> {
        Element::generator((slot - 1) * self.local_generators + local)
    }

    /// `p*_{i,j}` applied to a class of the 2-fold product given as leg terms:
    /// each `u × v` becomes `p_i*(u) ∪ p_j*(v)`.
    pub fn place_legs(&self, legs: &[(Monomial, Monomial, F)], i: usize, j: usize) -> Result<Element<F>> {
        let gens = &self.presentation.generators;
        let mut out = Element::zero();
        for (u, v, c) in legs {
            let left = Element::monomial(self.place(u, i), c.clone());
            let right = Element::monomial(self.place(v, j), F::one());
            out = out.add(&gens.multiply(&left, &right)?);
        }
        Ok(out)
    }
}

/// [H*(base)]^{⊗n} as a presentation on slot-indexed generators.
pub fn power_presentation<F: Field>(base: &AlgebraPresentation<F>, n: usize) -> Result<ProductPresentation<F>> {
    let k = base.generators.len();
    let gens = GeneratorSet::new(
        (1..=n).flat_map(|s| base.generators.iter().map(move |g| (format!("{}_{s}", g.name), g.degree))),
    )?;
    let mut pp = ProductPresentation {
        presentation: AlgebraPresentation {
            name: format!("[{}]^{n}", base.name),
            generators: Arc::new(gens),
            relations: vec![],
            top_degree: base.top_degree.map(|t| t * n as u32),
        },
        local_generators: k,
        slots: n,
    };
    let mut relations = Vec::new();
    for s in 1..=n {
        for r in &base.relations {
            relations.push(Element::from_terms(r.terms().map(|(m, c)| (pp.place(m, s), c.clone()))));
        }
    }
    pp.presentation.relations = relations;
    pp.presentation.validate()?;
    Ok(pp)
}

/// The Totaro model H/I for X = Σ_g: H = H*(Σ_g^{×n}; ℚ) and I generated by
/// the pulled-back diagonal classes Δ_{i,j}.
pub struct TotaroModel {
    pub spec: SurfaceSpec,
    pub product: ProductPresentation<Rational>,
    /// Δ_{i,j} for i < j, as elements of H, keyed by (i, j).
    pub deltas: Vec<((usize, usize), Element<Rational>)>,
    pub quotient: Quotient<Rational>,
}

impl TotaroModel {
    pub fn algebra(&self) -> &Arc<GradedAlgebra<Rational>> {
        self.quotient.algebra()
    }

    pub fn delta(&self, i: usize, j: usize) -> Option<&Element<Rational>> {
        self.deltas.iter().find(|(k, _)| *k == (i, j)).map(|(_, e)| e)
    }
}

pub fn totaro_presentation(g: u32, n: usize) -> Result<(ProductPresentation<Rational>, Vec<((usize, usize), Element<Rational>)>)> {
    if n == 0 {
        return Err(Error::Rejected("n must be at least 1".into()));
    }
    let base = surface_model::<Rational>(g)?;
    let legs = surface_diagonal(&base)?;
    let mut product = power_presentation(&base.quotient.presentation, n)?;
    let mut deltas = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            deltas.push(((i, j), product.place_legs(&legs, i, j)?));
        }
    }
    product.presentation.relations.extend(deltas.iter().map(|(_, d)| d.clone()));
    product.presentation.name = match g {
        0 => format!("A_S2(n={n})"),
        1 => format!("A_T(n={n})"),
        _ => format!("A_Σ{g}(n={n})"),
    };
    Ok((product, deltas))
}

pub fn totaro_algebra(spec: &SurfaceSpec) -> Result<TotaroModel> {
    totaro_algebra_with(spec, QuotientOptions::default())
}

pub fn totaro_algebra_with(spec: &SurfaceSpec, opts: QuotientOptions) -> Result<TotaroModel> {
    if spec.punctures != 0 {
        return Err(Error::Unsupported("the Totaro model is built for closed surfaces only".into()));
    }
    let n = spec.points as usize;
    let (product, deltas) = totaro_presentation(spec.genus, n)?;
    let quotient = quotient_with(&product.presentation, opts)?;
    let model = TotaroModel { spec: *spec, product, deltas, quotient };
    if spec.genus == 1 {
        check_torus_ideal(&model)?;
    }
    Ok(model)
}

/// For the torus, the degree-two ideal must be spanned by the reduced
/// generators x_j y_j and x_j y_i + x_i y_j.
fn check_torus_ideal(model: &TotaroModel) -> Result<()> {
    let n = model.spec.points as usize;
    let gens = &model.product.presentation.generators;
    let red = reduced_elements(&model.product, n);
    let mut xy = Vec::new();
    for j in 2..=n {
        xy.push(gens.multiply(&red.x[j - 1], &red.y[j - 1])?);
        for i in 2..j {
            let t1 = gens.multiply(&red.x[j - 1], &red.y[i - 1])?;
            let t2 = gens.multiply(&red.x[i - 1], &red.y[j - 1])?;
            xy.push(t1.add(&t2));
        }
    }
    let from_deltas = Subspace::span(model.deltas.iter().map(|(_, d)| d.to_sparse()));
    let from_xy = Subspace::span(xy.iter().map(Element::to_sparse));
    if from_deltas != from_xy {
        return Err(Error::ModelInconsistency("Δ_{i,j} do not span the reduced-generator ideal".into()));
    }
    Ok(())
}

/// x_1 = a_1, y_1 = b_1, x_j = a_j - a_1, y_j = b_j - b_1, as elements of H.
#[derive(Clone, Debug)]
pub struct ReducedGenerators<F> {
    /// `x[j - 1]` is x_j.
    pub x: Vec<Element<F>>,
    pub y: Vec<Element<F>>,
}

fn reduced_elements<F: Field>(product: &ProductPresentation<F>, n: usize) -> ReducedGenerators<F> {
    let a = |s| product.slot_generator(0, s);
    let b = |s| product.slot_generator(1, s);
    let mut x = vec![a(1)];
    let mut y = vec![b(1)];
    for j in 2..=n {
        x.push(a(j).sub(&a(1)));
        y.push(b(j).sub(&b(1)));
    }
    ReducedGenerators { x, y }
}

/// The reduced generators of a Totaro model; for the torus also checks the
/// identities x_j y_j = 0 and x_j y_i + x_i y_j = 0 in A_T.
pub fn reduced_generators(model: &TotaroModel) -> Result<ReducedGenerators<Rational>> {
    if model.spec.genus == 0 {
        return Err(Error::Unsupported("reduced generators need genus at least 1".into()));
    }
    let n = model.spec.points as usize;
    let red = reduced_elements(&model.product, n);
    if model.spec.genus == 1 {
        let gens = &model.product.presentation.generators;
        let q = &model.quotient;
        for j in 2..=n {
            let xy = gens.multiply(&red.x[j - 1], &red.y[j - 1])?;
            if !q.is_zero(&xy)? {
                return Err(Error::ModelInconsistency(format!("x_{j} y_{j} ≠ 0 in A_T")));
            }
            for i in 2..j {
                let s = gens.multiply(&red.x[j - 1], &red.y[i - 1])?.add(&gens.multiply(&red.x[i - 1], &red.y[j - 1])?);
                if !q.is_zero(&s)? {
                    return Err(Error::ModelInconsistency(format!("x_{j} y_{i} + x_{i} y_{j} ≠ 0 in A_T")));
                }
            }
        }
        if q.is_zero(&gens.multiply(&red.x[0], &red.y[0])?)? {
            return Err(Error::ModelInconsistency("x_1 y_1 = 0 in A_T".into()));
        }
    }
    Ok(red)
}

/// Rewrites a slot presentation (genus ≥ 1) in the reduced coordinates
/// x_j, y_j, keeping every other slot generator.
///
/// Generator order is x_2, y_2, ..., x_n, y_n, x_1, y_1 followed by the
/// remaining slot generators in slot order.
pub fn to_reduced_coordinates<F: Field>(product: &ProductPresentation<F>, name: &str) -> Result<AlgebraPresentation<F>> {
    let n = product.slots;
    let k = product.local_generators;
    let old = &product.presentation.generators;
    let mut names: Vec<(String, u32)> = Vec::new();
    for j in (2..=n).chain(std::iter::once(1)) {
        names.push((format!("x_{j}"), 1));
        names.push((format!("y_{j}"), 1));
    }
    for s in 1..=n {
        for l in 2..k {
            let g = old.get((s - 1) * k + l);
            names.push((g.name.clone(), g.degree));
        }
    }
    let gens = GeneratorSet::new(names)?;
    let id = |s: &str| gens.id(s).expect("reduced generator");
    let mut images = vec![Element::<F>::zero(); old.len()];
    for s in 1..=n {
        let (xs, ys) = (Element::generator(id(&format!("x_{s}"))), Element::generator(id(&format!("y_{s}"))));
        let (x1, y1) = (Element::generator(id("x_1")), Element::generator(id("y_1")));
        let (ai, bi) = ((s - 1) * k, (s - 1) * k + 1);
        if s == 1 {
            images[ai] = xs;
            images[bi] = ys;
        } else {
            images[ai] = xs.add(&x1);
            images[bi] = ys.add(&y1);
        }
        for l in 2..k {
            let g = old.get((s - 1) * k + l);
            images[g.id] = Element::generator(id(&g.name));
        }
    }
    let relations = product
        .presentation
        .relations
        .iter()
        .map(|r| old.substitute(&gens, r, &images))
        .collect::<Result<Vec<_>>>()?;
    AlgebraPresentation::new(name, gens, relations, product.presentation.top_degree)
}

/// The ideal I_T in reduced generators: x_j y_j (2 ≤ j ≤ n) and
/// x_j y_i + x_i y_j (2 ≤ i < j ≤ n), over the generator set of
/// [`torus_reduced_presentation`].
pub fn torus_xy_ideal<F: Field>(gens: &GeneratorSet, n: usize) -> Result<Vec<Element<F>>> {
    let g = |s: String| -> Result<Element<F>> {
        gens.id(&s).map(Element::generator).ok_or_else(|| Error::Structural(format!("missing generator {s}")))
    };
    let mut out = Vec::new();
    for j in 2..=n {
        out.push(gens.multiply(&g(format!("x_{j}"))?, &g(format!("y_{j}"))?)?);
        for i in 2..j {
            let t1 = gens.multiply(&g(format!("x_{j}"))?, &g(format!("y_{i}"))?)?;
            let t2 = gens.multiply(&g(format!("x_{i}"))?, &g(format!("y_{j}"))?)?;
            out.push(t1.add(&t2));
        }
    }
    Ok(out)
}

/// A_T in reduced generators, with the defining ideal checked against the
/// x/y description degree-wise.
pub fn torus_reduced_presentation(n: usize) -> Result<AlgebraPresentation<Rational>> {
    let (product, _) = totaro_presentation(1, n)?;
    let p = to_reduced_coordinates(&product, &format!("A_T(n={n})"))?;
    let xy = torus_xy_ideal::<Rational>(&p.generators, n)?;
    let lhs = Subspace::span(p.relations.iter().map(Element::to_sparse));
    let rhs = Subspace::span(xy.iter().map(Element::to_sparse));
    if lhs != rhs {
        return Err(Error::ModelInconsistency("reduced Δ_{i,j} do not span the x/y ideal".into()));
    }
    Ok(p)
}

pub fn torus_reduced_algebra(n: usize, opts: QuotientOptions) -> Result<Quotient<Rational>> {
    quotient_with(&torus_reduced_presentation(n)?, opts)
}

/// The pairs (J, K) of subsets of {2..n} with max J < min K, as sorted lists.
pub fn ordered_subset_pairs(n: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let rest: Vec<usize> = (2..=n).collect();
    let m = rest.len();
    let mut out = Vec::new();
    for jmask in 0u32..(1 << m) {
        for kmask in 0u32..(1 << m) {
            if jmask & kmask != 0 {
                continue;
            }
            let jset: Vec<usize> = (0..m).filter(|b| jmask >> b & 1 == 1).map(|b| rest[b]).collect();
            let kset: Vec<usize> = (0..m).filter(|b| kmask >> b & 1 == 1).map(|b| rest[b]).collect();
            if let (Some(mj), Some(mk)) = (jset.last(), kset.first()) {
                if mj >= mk {
                    continue;
                }
            }
            out.push((jset, kset));
        }
    }
    out
}

/// Which generators B_Σ is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coordinates {
    /// a_i, b_i, c_i, d_i.
    Standard,
    /// x_j, y_j, c_i, d_i.
    Reduced,
}

/// B_Σ = H_Σ / (I_Σ + J_Σ), where J_Σ is generated by the products of
/// classes from handles other than the first taken in distinct slots.
/// For genus two, J_Σ = ⟨c_i c_j, c_i d_j, d_i d_j : i ≠ j⟩.
pub struct BModel {
    pub genus: u32,
    pub n: usize,
    pub coordinates: Coordinates,
    pub quotient: Quotient<Rational>,
    /// x_j, y_j as elements of the free algebra of `quotient`.
    pub x: Vec<Element<Rational>>,
    pub y: Vec<Element<Rational>>,
}

pub fn genus2_b_presentation(n: usize, coords: Coordinates) -> Result<AlgebraPresentation<Rational>> {
    b_presentation(2, n, coords)
}

pub fn b_presentation(g: u32, n: usize, coords: Coordinates) -> Result<AlgebraPresentation<Rational>> {
    if g < 2 {
        return Err(Error::Unsupported(format!("the B quotient needs genus at least 2 (got {g})")));
    }
    let (mut product, _) = totaro_presentation(g, n)?;
    let gens = product.presentation.generators.clone();
    let k = product.local_generators;
    let mut j_ideal = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for u in 2..k {
                for v in 2..k {
                    j_ideal.push(gens.multiply(&product.slot_generator(u, i), &product.slot_generator(v, j))?);
                }
            }
        }
    }
    product.presentation.relations.extend(j_ideal);
    let name = if g == 2 { format!("B_Σ(n={n})") } else { format!("B_Σ{g}(n={n})") };
    match coords {
        Coordinates::Standard => {
            product.presentation.name = name;
            Ok(product.presentation)
        }
        Coordinates::Reduced => to_reduced_coordinates(&product, &name),
    }
}

pub fn genus2_b_algebra(n: usize, coords: Coordinates, opts: QuotientOptions) -> Result<BModel> {
    b_algebra(2, n, coords, opts)
}

pub fn b_algebra(g: u32, n: usize, coords: Coordinates, opts: QuotientOptions) -> Result<BModel> {
    if n == 0 {
        return Err(Error::Rejected("n must be at least 1".into()));
    }
    let p = b_presentation(g, n, coords)?;
    let gens = p.generators.clone();
    let (x, y): (Vec<_>, Vec<_>) = match coords {
        Coordinates::Reduced => (1..=n)
            .map(|j| (p.generator(&format!("x_{j}")).unwrap(), p.generator(&format!("y_{j}")).unwrap()))
            .unzip(),
        Coordinates::Standard => {
            let k = 2 * g as usize;
            let a = |s: usize| Element::generator((s - 1) * k);
            let b = |s: usize| Element::generator((s - 1) * k + 1);
            (1..=n)
                .map(|j| if j == 1 { (a(1), b(1)) } else { (a(j).sub(&a(1)), b(j).sub(&b(1))) })
                .unzip()
        }
    };
    let quotient = quotient_with(&p, opts)?;
    // The monomials x_J y_K (max J < min K) must stay independent.
    let mut vs = Vec::new();
    let pairs = ordered_subset_pairs(n);
    for (jset, kset) in &pairs {
        let mut e = Element::one();
        for &j in jset {
            e = gens.multiply(&e, &x[j - 1])?;
        }
        for &k in kset {
            e = gens.multiply(&e, &y[k - 1])?;
        }
        vs.push(quotient.normal_form(&e)?);
    }
    if Subspace::span(vs).rank() != pairs.len() {
        return Err(Error::ModelInconsistency("x_J y_K are linearly dependent in B_Σ".into()));
    }
    Ok(BModel { genus: g, n, coordinates: coords, quotient, x, y })
}

/// Arnold's presentation of H*(F(ℝ², n)): generators α_{i,j} (i < j) of
/// degree one, with α_{i,j}α_{i,k} + α_{j,k}α_{j,i} + α_{k,i}α_{k,j} = 0.
pub fn arnold_algebra<F: Field>(n: usize) -> Result<AlgebraPresentation<F>> {
    if n == 0 {
        return Err(Error::Rejected("n must be at least 1".into()));
    }
    let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    arrangement_presentation(&format!("Arnold(n={n})"), &labels, &[], |i, j| format!("α_{}{}", labels_pair(i, j).0, labels_pair(i, j).1))
}

fn labels_pair(i: usize, j: usize) -> (usize, usize) {
    (i + 1, j + 1)
}

/// Generators α_{i,j} for pairs of points not in `excluded`, Arnold triple
/// relations with α_{j,i} = α_{i,j}, excluded classes set to zero, and
/// squares zero.
fn arrangement_presentation<F: Field>(
    name: &str,
    points: &[String],
    excluded: &[(usize, usize)],
    gen_name: impl Fn(usize, usize) -> String,
) -> Result<AlgebraPresentation<F>> {
    let n = points.len();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if !excluded.contains(&(i, j)) {
                pairs.push((i, j));
            }
        }
    }
    let gens = GeneratorSet::new(pairs.iter().map(|&(i, j)| (gen_name(i, j), 1)))?;
    let alpha = |i: usize, j: usize| -> Element<F> {
        let key = if i < j { (i, j) } else { (j, i) };
        pairs.iter().position(|&p| p == key).map(Element::generator).unwrap_or_else(Element::zero)
    };
    let mut relations = Vec::new();
    if F::KIND.characteristic() == 2 {
        for g in 0..pairs.len() {
            relations.push(gens.multiply(&Element::generator(g), &Element::generator(g))?);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let t1 = gens.multiply(&alpha(i, j), &alpha(i, k))?;
                let t2 = gens.multiply(&alpha(j, k), &alpha(j, i))?;
                let t3 = gens.multiply(&alpha(k, i), &alpha(k, j))?;
                relations.push(t1.add(&t2).add(&t3));
            }
        }
    }
    AlgebraPresentation::new(name, gens, relations, None)
}

/// H*(F(ℝ² ∖ Q_k, n)) for k ∈ {1, 2}, as the fiber of F(ℝ², n + k) over the
/// positions of the k punctures: e_{i,a} is the class linking point i with
/// puncture a, e_{i,j} links points i < j.
pub fn punctured_plane_algebra<F: Field>(n: usize, k: usize) -> Result<AlgebraPresentation<F>> {
    if !(1..=2).contains(&k) {
        return Err(Error::Unsupported(format!("punctured plane with {k} punctures")));
    }
    if n == 0 {
        return Err(Error::Rejected("n must be at least 1".into()));
    }
    // Points 0..k are the punctures, k..k+n the moving points.
    let points: Vec<String> = (0..n + k).map(|i| i.to_string()).collect();
    let excluded: Vec<(usize, usize)> = if k == 2 { vec![(0, 1)] } else { vec![] };
    let name = format!("F(R2-Q{k},n={n})");
    arrangement_presentation(&name, &points, &excluded, |i, j| {
        if i < k {
            format!("e_{}_{}", j - k + 1, i)
        } else {
            format!("e_{}_{}", i - k + 1, j - k + 1)
        }
    })
    .map(|mut p| {
        p.name = name.clone();
        p
    })
}

/// H*(F(S², n); ℤ₂) ≅ ℤ₂[α]/(α⁴) ⊗ H*(F(ℝ² ∖ Q₂, n − 3); ℤ₂).
pub fn sphere_mod2_presentation(n: usize) -> Result<AlgebraPresentation<Gf2>> {
    if n < 3 {
        return Err(Error::Unsupported(format!("sphere model needs n ≥ 3 (got {n})")));
    }
    let mut names = vec![("alpha".to_string(), 1)];
    let fiber = if n > 3 { Some(punctured_plane_algebra::<Gf2>(n - 3, 2)?) } else { None };
    if let Some(f) = &fiber {
        names.extend(f.generators.iter().map(|g| (g.name.clone(), g.degree)));
    }
    let gens = GeneratorSet::new(names)?;
    let mut relations = vec![Element::monomial(Monomial::from_factors(vec![(0, 4)]), Gf2::one())];
    if let Some(f) = &fiber {
        for r in &f.relations {
            relations.push(Element::from_terms(r.terms().map(|(m, c)| {
                (Monomial::from_factors(m.factors().iter().map(|&(g, e)| (g + 1, e)).collect()), *c)
            })));
        }
    }
    AlgebraPresentation::new(format!("F(S2,n={n}) mod 2"), gens, relations, None)
}

pub fn so3_mod2_presentation() -> Result<AlgebraPresentation<Gf2>> {
    let gens = GeneratorSet::new([("alpha", 1)])?;
    let a4 = Element::monomial(Monomial::from_factors(vec![(0, 4)]), Gf2::one());
    AlgebraPresentation::new("Z2[α]/(α^4)", gens, vec![a4], Some(4))
}

pub fn sphere_mod2_model(n: usize, opts: QuotientOptions) -> Result<Quotient<Gf2>> {
    quotient_with(&sphere_mod2_presentation(n)?, opts)
}

/// Degree-wise convolution of two Hilbert series.
pub fn convolve(a: &[usize], b: &[usize]) -> Vec<usize> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::quotient;

    #[test]
    fn surfaces() {
        let t = quotient(&surface_cohomology::<Rational>(1).unwrap()).unwrap();
        assert_eq!(t.hilbert_series(), vec![1, 2, 1]);
        let s2 = quotient(&surface_cohomology::<Rational>(2).unwrap()).unwrap();
        assert_eq!(s2.hilbert_series(), vec![1, 4, 1]);
        let p = &s2.presentation;
        assert!(s2.is_zero(&p.word(&["a", "c"]).unwrap()).unwrap());
        assert!(!s2.is_zero(&p.word(&["a", "b"]).unwrap()).unwrap());
        let s3 = quotient(&surface_cohomology::<Rational>(3).unwrap()).unwrap();
        assert_eq!(s3.hilbert_series(), vec![1, 6, 1]);
        let sphere = quotient(&surface_cohomology::<Rational>(0).unwrap()).unwrap();
        assert_eq!(sphere.hilbert_series(), vec![1, 0, 1]);
        let t2 = quotient(&surface_cohomology::<Gf2>(2).unwrap()).unwrap();
        assert_eq!(t2.hilbert_series(), vec![1, 4, 1]);
    }

    #[test]
    fn genus_two_omega_is_ab() {
        let m = surface_model::<Rational>(2).unwrap();
        let cd = m.quotient.normal_form(&m.quotient.presentation.word(&["c", "d"]).unwrap()).unwrap();
        assert_eq!(cd, m.omega);
        assert_eq!(m.quotient.algebra().format(&m.omega), "ab");
    }

    #[test]
    fn n_zero_rejected() {
        assert!(matches!(SurfaceSpec::new(1, 0, 0), Err(Error::Rejected(_))));
        assert!(matches!(totaro_presentation(1, 0), Err(Error::Rejected(_))));
    }

    #[test]
    fn punctured_plane_errors() {
        assert!(matches!(punctured_plane_algebra::<Rational>(2, 3), Err(Error::Unsupported(_))));
        assert!(matches!(sphere_mod2_presentation(2), Err(Error::Unsupported(_))));
    }

    #[test]
    fn convolution() {
        assert_eq!(convolve(&[1, 2, 1], &[1, 2, 1]), vec![1, 4, 6, 4, 1]);
        assert_eq!(convolve(&[1, 4, 5, 2], &[1, 4, 5, 2]), vec![1, 8, 26, 44, 41, 20, 4]);
    }
}
