//! Cup length and zero-divisor cup length.
//!
//! Exact values come from degreewise power iteration on an ideal; lower
//! bounds come from explicit products of zero-divisors with a witness term.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{tensor_square, GradedAlgebra};
use crate::error::{Error, Result};
use crate::field::{Field, Gf2, Rational};
use crate::linalg::{EchelonBuilder, Subspace, Vector};
use crate::models::{
    b_algebra, punctured_plane_algebra, surface_generator_names, sphere_mod2_presentation, to_reduced_coordinates,
    torus_reduced_algebra, totaro_presentation, Coordinates,
};
use crate::monomial::Element;
use crate::presentation::{quotient_with, Quotient, QuotientOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Quantity {
    Cl,
    Zcl,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    PowerIteration,
    Certificate,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::PowerIteration => "power-iteration",
            Method::Certificate => "certificate",
        })
    }
}

/// A cup-length value. `exact` is only ever set by power iteration that
/// reached a vanishing power.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub quantity: Quantity,
    pub value: usize,
    pub exact: bool,
    pub method: Method,
    pub algebra: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub factors: Option<Vec<String>>,
    /// `ranks[k - 1][d]` is the dimension of the k-th ideal power in degree d.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub ranks: Vec<Vec<usize>>,
}

#[derive(Clone, Copy, Debug)]
pub struct ZclOptions {
    /// Largest power examined.
    pub cap: usize,
    /// Largest admissible dimension of A ⊗ A.
    pub max_tensor_dim: usize,
}

impl Default for ZclOptions {
    fn default() -> Self {
        ZclOptions { cap: 64, max_tensor_dim: 250_000 }
    }
}

impl ZclOptions {
    pub fn with_cap(cap: usize) -> Self {
        ZclOptions { cap, ..Default::default() }
    }
}

fn check_budget<F: Field>(a: &GradedAlgebra<F>, opts: &ZclOptions) -> Result<()> {
    let size = a.dim() * a.dim();
    if size > opts.max_tensor_dim {
        return Err(Error::Resource { what: format!("{} ⊗ {}", a.name(), a.name()), size, limit: opts.max_tensor_dim, partial: None });
    }
    Ok(())
}

/// ker(μ: (A⊗A)^d → A^d) for each degree d of a tensor square.
///
/// Uses the basis {u⊗v − 1⊗uv : u ≠ 1}, which complements 1⊗A.
pub fn zero_divisor_subspace<F: Field>(aa: &GradedAlgebra<F>) -> Result<Vec<Subspace<usize, F>>> {
    let (a, _) = aa.tensor_factors().ok_or_else(|| Error::Structural("expected a tensor square".into()))?;
    let a = a.clone();
    (0..=aa.top_degree())
        .map(|d| {
            let mut rows = Vec::new();
            for t in aa.degree_range(d) {
                let (i, j) = aa.tensor_split(t)?;
                if i == 0 {
                    continue;
                }
                let prod = aa.tensor_elements(&a.unit(), &a.mul_basis(i, j))?;
                rows.push(Vector::unit(t).sub(&prod));
            }
            Ok(Subspace::span(rows))
        })
        .collect()
}

/// Degreewise powers of an ideal: I^{k+1} = Σ_g g·I^k, where `gens`
/// generate the algebra, so that this equals the span of pairwise products.
///
/// Returns (largest nonzero power ≤ cap, whether the next power vanished,
/// per-power ranks).
fn ideal_powers<F: Field>(
    alg: &GradedAlgebra<F>,
    first: Vec<Vec<Vector<F>>>,
    gens: &[(Vector<F>, usize)],
    cap: usize,
) -> (usize, bool, Vec<Vec<usize>>) {
    let top = alg.top_degree();
    let mut cur = first;
    let rank_row = |rows: &Vec<Vec<Vector<F>>>| {
        let mut r: Vec<usize> = rows.iter().map(Vec::len).collect();
        while r.last() == Some(&0) {
            r.pop();
        }
        r
    };
    let mut ranks = vec![rank_row(&cur)];
    if cur.iter().all(Vec::is_empty) {
        return (0, true, ranks);
    }
    let mut k = 1;
    loop {
        let next: Vec<Vec<Vector<F>>> = (0..=top)
            .into_par_iter()
            .map(|d| {
                let mut b = EchelonBuilder::new();
                for (g, dg) in gens {
                    if *dg > d {
                        continue;
                    }
                    for row in &cur[d - dg] {
                        b.insert(alg.mul(g, row));
                    }
                }
                b.finish().rows().to_vec()
            })
            .collect();
        if next.iter().all(Vec::is_empty) {
            return (k, true, ranks);
        }
        if k == cap {
            return (cap, false, ranks);
        }
        ranks.push(rank_row(&next));
        cur = next;
        k += 1;
    }
}

fn homogeneous_generators<F: Field>(a: &GradedAlgebra<F>) -> Result<Vec<(Vector<F>, usize)>> {
    let mut out = Vec::new();
    for g in a.generators() {
        match a.degree(g)? {
            Some(d) if d > 0 => out.push((g.clone(), d)),
            Some(_) => return Err(Error::Structural("algebra generator of degree 0".into())),
            None => {}
        }
    }
    Ok(out)
}

pub fn zcl_exact<F: Field>(a: &Arc<GradedAlgebra<F>>, opts: ZclOptions) -> Result<BoundReport> {
    check_budget(a, &opts)?;
    let aa = tensor_square(a);
    zcl_exact_in(&aa, opts.cap)
}

/// Power iteration on ker μ inside an already built tensor square.
pub fn zcl_exact_in<F: Field>(aa: &GradedAlgebra<F>, cap: usize) -> Result<BoundReport> {
    let (a, _) = aa.tensor_factors().ok_or_else(|| Error::Structural("expected a tensor square".into()))?;
    let z = zero_divisor_subspace(aa)?;
    let first = z.iter().map(|s| s.rows().to_vec()).collect();
    let gens = homogeneous_generators(a)?
        .into_iter()
        .map(|(u, d)| Ok((aa.bar(&u)?, d)))
        .collect::<Result<Vec<_>>>()?;
    let (value, exact, ranks) = ideal_powers(aa, first, &gens, cap);
    Ok(BoundReport {
        quantity: Quantity::Zcl,
        value,
        exact,
        method: Method::PowerIteration,
        algebra: a.name().to_string(),
        witness: None,
        factors: None,
        ranks,
    })
}

/// Largest q with (A⁺)^q ≠ 0.
pub fn cup_length<F: Field>(a: &GradedAlgebra<F>) -> Result<BoundReport> {
    let first = (0..=a.top_degree())
        .map(|d| if d == 0 { vec![] } else { a.degree_range(d).map(Vector::unit).collect() })
        .collect();
    let gens = homogeneous_generators(a)?;
    let (value, exact, ranks) = ideal_powers(a, first, &gens, usize::MAX);
    Ok(BoundReport {
        quantity: Quantity::Cl,
        value,
        exact,
        method: Method::PowerIteration,
        algebra: a.name().to_string(),
        witness: None,
        factors: None,
        ranks,
    })
}

/// A product of zero-divisors with a nonzero coefficient on one basis tensor.
#[derive(Clone, Debug)]
pub struct ZclCertificate<F> {
    pub algebra: String,
    pub factors: Vec<Vector<F>>,
    pub factor_labels: Vec<String>,
    /// Basis index of the witness in A ⊗ A.
    pub witness: usize,
    pub witness_label: String,
    /// Coefficient of the product on the witness.
    pub coefficient: F,
    pub certified_length: usize,
}

impl<F: Field> ZclCertificate<F> {
    pub fn report(&self) -> BoundReport {
        BoundReport {
            quantity: Quantity::Zcl,
            value: self.certified_length,
            exact: false,
            method: Method::Certificate,
            algebra: self.algebra.clone(),
            witness: Some(format!("{}·({})", self.coefficient, self.witness_label)),
            factors: Some(self.factor_labels.clone()),
            ranks: vec![],
        }
    }
}

/// Expands `factors` left to right in A ⊗ A and reads off the coefficient on
/// `witness`, or on the first nonzero basis tensor when none is given.
pub fn certificate_product<F: Field>(
    aa: &GradedAlgebra<F>,
    factors: &[Vector<F>],
    witness: Option<usize>,
) -> Result<ZclCertificate<F>> {
    for (i, f) in factors.iter().enumerate() {
        if !aa.multiplication_map(f)?.is_zero() {
            return Err(Error::Contract(format!("factor {} ({}) is not a zero-divisor", i + 1, aa.format(f))));
        }
    }
    let mut acc = aa.unit();
    for f in factors {
        acc = aa.mul(&acc, f);
    }
    let terms = || acc.iter().map(|(k, c)| format!("{c}·({})", aa.label(*k))).collect::<Vec<_>>();
    let witness = match witness {
        Some(w) => w,
        None => match acc.iter().next() {
            Some((k, _)) => *k,
            None => {
                return Err(Error::CertificateFailure { message: "product of zero-divisors vanishes".into(), nonzero_terms: vec![] })
            }
        },
    };
    let coefficient = acc.get(&witness);
    if coefficient.is_zero() {
        return Err(Error::CertificateFailure {
            message: format!("zero coefficient on witness {}", aa.label(witness)),
            nonzero_terms: terms(),
        });
    }
    Ok(ZclCertificate {
        algebra: aa.tensor_factors().map(|(a, _)| a.name().to_string()).unwrap_or_default(),
        factor_labels: factors.iter().map(|f| aa.format(f)).collect(),
        factors: factors.to_vec(),
        witness,
        witness_label: aa.label(witness).to_string(),
        coefficient,
        certified_length: factors.len(),
    })
}

/// A basis tensor b_i ⊗ b_j and scale s with u ⊗ v = s · b_i ⊗ b_j, for free
/// algebra elements u, v whose normal forms are single basis elements.
pub fn basis_witness<F: Field>(
    q: &Quotient<F>,
    aa: &GradedAlgebra<F>,
    left: &Element<F>,
    right: &Element<F>,
) -> Result<(usize, F)> {
    let single = |e: &Element<F>| -> Result<(usize, F)> {
        let v = q.normal_form(e)?;
        match v.entries() {
            [(i, c)] => Ok((*i, c.clone())),
            _ => Err(Error::CertificateFailure {
                message: format!("witness factor {} is not a multiple of a basis element", q.generators().element_name(e)),
                nonzero_terms: v.iter().map(|(i, c)| format!("{c}·({})", q.algebra().label(*i))).collect(),
            }),
        }
    };
    let (i, ci) = single(left)?;
    let (j, cj) = single(right)?;
    Ok((aa.tensor_index(i, j)?, ci.mul(&cj)))
}

/// Certificate against an element witness u ⊗ v: the coefficient is reported
/// relative to u ⊗ v rather than to the basis tensor.
fn certificate_with_element_witness<F: Field>(
    q: &Quotient<F>,
    aa: &GradedAlgebra<F>,
    factors: &[Vector<F>],
    left: &Element<F>,
    right: &Element<F>,
) -> Result<ZclCertificate<F>> {
    let (w, scale) = basis_witness(q, aa, left, right)?;
    let mut cert = certificate_product(aa, factors, Some(w))?;
    cert.coefficient = cert.coefficient.div(&scale).expect("witness scale is nonzero");
    let gens = q.generators();
    cert.witness_label = format!("{}⊗{}", gens.element_name(left), gens.element_name(right));
    Ok(cert)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateFamily {
    Torus,
    Genus2,
    Sphere,
    PuncturedModIdeal,
}

impl FromStr for CertificateFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "torus" => Ok(CertificateFamily::Torus),
            "genus2" => Ok(CertificateFamily::Genus2),
            "sphere" => Ok(CertificateFamily::Sphere),
            "punctured-mod-ideal" => Ok(CertificateFamily::PuncturedModIdeal),
            _ => Err(Error::Parse(format!("unknown certificate case {s:?}"))),
        }
    }
}

/// A certificate over either coefficient field.
#[derive(Clone, Debug)]
pub enum AnyCertificate {
    Rational(ZclCertificate<Rational>),
    Gf2(ZclCertificate<Gf2>),
}

impl AnyCertificate {
    pub fn certified_length(&self) -> usize {
        match self {
            AnyCertificate::Rational(c) => c.certified_length,
            AnyCertificate::Gf2(c) => c.certified_length,
        }
    }

    pub fn coefficient(&self) -> String {
        match self {
            AnyCertificate::Rational(c) => c.coefficient.to_string(),
            AnyCertificate::Gf2(c) => c.coefficient.to_string(),
        }
    }

    pub fn report(&self) -> BoundReport {
        match self {
            AnyCertificate::Rational(c) => c.report(),
            AnyCertificate::Gf2(c) => c.report(),
        }
    }
}

fn word<F: Field>(q: &Quotient<F>, names: &[String]) -> Result<Element<F>> {
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    q.presentation.word(&refs)
}

fn bars<F: Field>(q: &Quotient<F>, aa: &GradedAlgebra<F>, names: &[String]) -> Result<Vec<Vector<F>>> {
    names.iter().map(|s| aa.bar(&q.generator_image(s)?)).collect()
}

pub fn family_certificates(case: CertificateFamily, n: usize, opts: QuotientOptions) -> Result<AnyCertificate> {
    match case {
        CertificateFamily::Torus => torus_certificate(n, opts).map(AnyCertificate::Rational),
        CertificateFamily::Genus2 => genus2_certificate(n, opts).map(AnyCertificate::Rational),
        CertificateFamily::Sphere => sphere_certificate(n, opts).map(AnyCertificate::Gf2),
        CertificateFamily::PuncturedModIdeal => punctured_mod_ideal_certificate(n, opts).map(AnyCertificate::Rational),
    }
}

fn names(prefix: &str, range: impl Iterator<Item = usize>) -> Vec<String> {
    range.map(|j| format!("{prefix}_{j}")).collect()
}

/// ∏ x̄_j ȳ_j in A_T ⊗ A_T against y_1⋯y_n ⊗ x_1⋯x_n.
pub fn torus_certificate(n: usize, opts: QuotientOptions) -> Result<ZclCertificate<Rational>> {
    let q = torus_reduced_algebra(n, opts)?;
    let aa = tensor_square(q.algebra());
    let fac: Vec<String> = (1..=n).flat_map(|j| [format!("x_{j}"), format!("y_{j}")]).collect();
    let factors = bars(&q, &aa, &fac)?;
    let left = word(&q, &names("y", 1..=n))?;
    let right = word(&q, &names("x", 1..=n))?;
    certificate_with_element_witness(&q, &aa, &factors, &left, &right)
}

/// ā_1 b̄_1 c̄_1 d̄_1 ∏_{j≥2} x̄_j ȳ_j in B_Σ ⊗ B_Σ against
/// ω_1 y_2⋯y_n ⊗ ω_1 x_2⋯x_n.
pub fn genus2_certificate(n: usize, opts: QuotientOptions) -> Result<ZclCertificate<Rational>> {
    genus_certificate(2, n, opts)
}

/// The genus-two certificate in the B quotient for genus g ≥ 2, with c, d
/// the classes of the second handle.
pub fn genus_certificate(g: u32, n: usize, opts: QuotientOptions) -> Result<ZclCertificate<Rational>> {
    let b = b_algebra(g, n, Coordinates::Reduced, opts)?;
    let q = &b.quotient;
    let aa = tensor_square(q.algebra());
    let local = surface_generator_names(g);
    let mut fac: Vec<String> = vec!["x_1".into(), "y_1".into(), format!("{}_1", local[2]), format!("{}_1", local[3])];
    fac.extend((2..=n).flat_map(|j| [format!("x_{j}"), format!("y_{j}")]));
    let factors = bars(q, &aa, &fac)?;
    let omega = ["x_1".to_string(), "y_1".to_string()];
    let left = word(q, &[&omega[..], &names("y", 2..=n)].concat())?;
    let right = word(q, &[&omega[..], &names("x", 2..=n)].concat())?;
    certificate_with_element_witness(q, &aa, &factors, &left, &right)
}

/// The first (lexicographic) set of 2(n−3) puncture-plane generators whose
/// bar product is nonzero in P ⊗ P, for P = H*(F(ℝ² ∖ Q₂, n − 3); ℤ₂).
pub fn sphere_bar_generators(n: usize, opts: QuotientOptions) -> Result<Vec<String>> {
    if n < 3 {
        return Err(Error::Unsupported(format!("sphere model needs n ≥ 3 (got {n})")));
    }
    if n == 3 {
        return Ok(vec![]);
    }
    let p = punctured_plane_algebra::<Gf2>(n - 3, 2)?;
    let q = quotient_with(&p, opts)?;
    let aa = tensor_square(q.algebra());
    let gen_names: Vec<String> = p.generators.iter().map(|g| g.name.clone()).collect();
    let all_bars = bars(&q, &aa, &gen_names)?;
    let size = 2 * (n - 3);
    let mut combo: Vec<usize> = (0..size).collect();
    let m = gen_names.len();
    loop {
        let prod = combo.iter().fold(aa.unit(), |acc, &i| aa.mul(&acc, &all_bars[i]));
        if !prod.is_zero() {
            return Ok(combo.iter().map(|&i| gen_names[i].clone()).collect());
        }
        // next combination in lexicographic order
        let Some(pos) = (0..size).rev().find(|&i| combo[i] < m - size + i) else {
            return Err(Error::CertificateFailure {
                message: format!("no product of {size} bar-generators is nonzero"),
                nonzero_terms: vec![],
            });
        };
        combo[pos] += 1;
        for i in pos + 1..size {
            combo[i] = combo[i - 1] + 1;
        }
    }
}

/// ᾱ³ times the searched bar-generators, in the mod-2 sphere model.
pub fn sphere_certificate(n: usize, opts: QuotientOptions) -> Result<ZclCertificate<Gf2>> {
    let extra = sphere_bar_generators(n, opts)?;
    let p = sphere_mod2_presentation(n)?;
    let q = quotient_with(&p, opts)?;
    let aa = tensor_square(q.algebra());
    let mut fac = vec!["alpha".to_string(); 3];
    fac.extend(extra);
    let factors = bars(&q, &aa, &fac)?;
    certificate_product(&aa, &factors, None)
}

/// zcl(F(ℝ² ∖ Q₂, n)) ≥ 2n from the bars of the puncture classes e_{i,0}, e_{i,1}.
pub fn punctured_plane_certificate(n: usize, opts: QuotientOptions) -> Result<ZclCertificate<Rational>> {
    let q = quotient_with(&punctured_plane_algebra::<Rational>(n, 2)?, opts)?;
    let aa = tensor_square(q.algebra());
    let names: Vec<String> = (1..=n).flat_map(|i| [format!("e_{i}_0"), format!("e_{i}_1")]).collect();
    let factors = bars(&q, &aa, &names)?;
    certificate_product(&aa, &factors, None)
}

/// A_Σ (genus two) in reduced coordinates modulo x_1y_1 and x_iy_1 + x_1y_i,
/// truncated above degree max(n, 2).
pub fn punctured_mod_ideal_quotient(n: usize, opts: QuotientOptions) -> Result<Quotient<Rational>> {
    let (product, _) = totaro_presentation(2, n)?;
    let mut p = to_reduced_coordinates(&product, &format!("A_Σ(n={n})/(x1y1, xiy1+x1yi)"))?;
    let g = |s: String| p.generator(&s);
    let mut extra = vec![p.multiply(&g("x_1".into())?, &g("y_1".into())?)?];
    for i in 2..=n {
        let t1 = p.multiply(&g(format!("x_{i}"))?, &g("y_1".into())?)?;
        let t2 = p.multiply(&g("x_1".into())?, &g(format!("y_{i}"))?)?;
        extra.push(t1.add(&t2));
    }
    p.relations.extend(extra);
    p.top_degree = Some(n.max(2) as u32);
    p.validate()?;
    quotient_with(&p, opts)
}

/// For each k in 0..=n, whether x_1⋯x_k y_{k+1}⋯y_n is nonzero in the
/// mod-ideal quotient.
pub fn mod_ideal_monomials(q: &Quotient<Rational>, n: usize) -> Result<Vec<(usize, bool)>> {
    (0..=n)
        .map(|k| {
            let e = word(q, &[names("x", 1..=k), names("y", k + 1..=n)].concat())?;
            Ok((k, !q.is_zero(&e)?))
        })
        .collect()
}

pub fn punctured_mod_ideal_certificate(n: usize, opts: QuotientOptions) -> Result<ZclCertificate<Rational>> {
    let q = punctured_mod_ideal_quotient(n, opts)?;
    for (k, nonzero) in mod_ideal_monomials(&q, n)? {
        if !nonzero {
            return Err(Error::CertificateFailure {
                message: format!("x_1⋯x_{k} y_{}⋯y_{n} vanishes modulo the ideal", k + 1),
                nonzero_terms: vec![],
            });
        }
    }
    let aa = tensor_square(q.algebra());
    let fac: Vec<String> = (1..=n).flat_map(|j| [format!("x_{j}"), format!("y_{j}")]).collect();
    let factors = bars(&q, &aa, &fac)?;
    let left = word(&q, &names("x", 1..=n))?;
    let right = word(&q, &names("y", 1..=n))?;
    certificate_with_element_witness(&q, &aa, &factors, &left, &right)
}

/// Dimensions around the differential d: E₂^{1,1} → E₂^{3,0} for the torus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct E2Report {
    pub n: usize,
    /// dim H¹(T^n) ⊗ span{α_{i,j}}.
    pub dim_w: usize,
    pub relation_rank: usize,
    pub dim_v: usize,
    pub rank_d: usize,
    pub kernel_dim: usize,
}

/// V = H¹(T^n) ⊗ span{α_{i,j}} modulo (p_i*x − p_j*x) ⊗ α_{i,j}, and
/// d(x ⊗ α_{i,j}) = x·Δ_{i,j} in H³(T^n).
pub fn e2_probe(n: usize) -> Result<E2Report> {
    if n < 2 {
        return Err(Error::Rejected("the E₂ probe needs n ≥ 2".into()));
    }
    let (product, deltas) = totaro_presentation(1, n)?;
    let gens = &product.presentation.generators;
    let h1: Vec<Element<Rational>> = (0..gens.len()).map(Element::generator).collect();
    let npairs = deltas.len();
    // W-coordinate of x ⊗ α_{pair}: x * npairs + pair
    let w_index = |x: usize, pair: usize| x * npairs + pair;
    let mut relations = Vec::new();
    for (pair, ((i, j), _)) in deltas.iter().enumerate() {
        for local in 0..2 {
            let xi = (i - 1) * 2 + local;
            let xj = (j - 1) * 2 + local;
            relations.push(Vector::from_entries(vec![(w_index(xi, pair), Rational::one()), (w_index(xj, pair), Rational::from_i64(-1))]));
        }
    }
    let mut images = Vec::new();
    for (x, xe) in h1.iter().enumerate() {
        for (pair, (_, delta)) in deltas.iter().enumerate() {
            debug_assert_eq!(images.len(), w_index(x, pair));
            images.push(gens.multiply(xe, delta)?.to_sparse());
        }
    }
    for r in &relations {
        let mut img = crate::linalg::SparseVec::zero();
        for (k, c) in r.iter() {
            img = img.add_scaled(&images[*k], c);
        }
        if !img.is_zero() {
            return Err(Error::ModelInconsistency("a defining relation of V is not a cycle of d".into()));
        }
    }
    let dim_w = images.len();
    let relation_rank = Subspace::span(relations).rank();
    let dim_v = dim_w - relation_rank;
    let rank_d = Subspace::span(images).rank();
    Ok(E2Report { n, dim_w, relation_rank, dim_v, rank_d, kernel_dim: dim_v - rank_d })
}

pub fn e2_kernel_dim(n: usize) -> Result<usize> {
    Ok(e2_probe(n)?.kernel_dim)
}
