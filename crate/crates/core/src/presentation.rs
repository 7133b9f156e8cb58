//! Finite presentations of graded-commutative algebras and their quotients.

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::GradedAlgebra;
use crate::error::{Error, Result};
use crate::field::{Field, FieldKind};
use crate::linalg::{EchelonBuilder, SparseVec, Subspace, Vector};
use crate::monomial::{Element, GeneratorSet, Monomial};

/// Default cap on the number of free monomials in a single degree.
pub const DEFAULT_MONOMIAL_BUDGET: usize = 2_000_000;

/// Generators, homogeneous relations and an optional truncation degree.
#[derive(Clone, Debug)]
pub struct AlgebraPresentation<F> {
    pub name: String,
    pub generators: Arc<GeneratorSet>,
    pub relations: Vec<Element<F>>,
    pub top_degree: Option<u32>,
}

impl<F: Field> AlgebraPresentation<F> {
    pub fn new(
        name: impl Into<String>,
        generators: GeneratorSet,
        relations: Vec<Element<F>>,
        top_degree: Option<u32>,
    ) -> Result<Self> {
        let p = AlgebraPresentation { name: name.into(), generators: Arc::new(generators), relations, top_degree };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let mut max_deg = 0;
        for r in &self.relations {
            self.generators.check(r)?;
            match self.generators.element_degree(r) {
                Ok(Some(d)) => max_deg = max_deg.max(d),
                Ok(None) => {}
                Err(_) => {
                    return Err(Error::Rejected(format!(
                        "relation {} is not homogeneous",
                        self.generators.element_name(r)
                    )))
                }
            }
        }
        if let Some(t) = self.top_degree {
            if t < max_deg {
                return Err(Error::Rejected(format!("top_degree {t} below relation degree {max_deg}")));
            }
        }
        Ok(())
    }

    pub fn generator(&self, name: &str) -> Result<Element<F>> {
        self.generators
            .id(name)
            .map(Element::generator)
            .ok_or_else(|| Error::Structural(format!("unknown generator {name}")))
    }

    pub fn multiply(&self, a: &Element<F>, b: &Element<F>) -> Result<Element<F>> {
        self.generators.multiply(a, b)
    }

    /// Builds the monomial with the named generators in the given order,
    /// including the Koszul sign of reordering.
    pub fn word(&self, names: &[&str]) -> Result<Element<F>> {
        let factors = names.iter().map(|n| self.generator(n)).collect::<Result<Vec<_>>>()?;
        self.generators.product(&factors)
    }

    pub fn with_relations(&self, name: impl Into<String>, extra: Vec<Element<F>>, top_degree: Option<u32>) -> Result<Self> {
        let mut relations = self.relations.clone();
        relations.extend(extra);
        let p = AlgebraPresentation {
            name: name.into(),
            generators: self.generators.clone(),
            relations,
            top_degree: top_degree.or(self.top_degree),
        };
        p.validate()?;
        Ok(p)
    }
}

/// One degree of a quotient: the free monomials, the ideal, and where the
/// normal monomials sit in the global basis.
#[derive(Clone, Debug)]
struct Level<F> {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    ideal: Subspace<usize, F>,
    basis_of_column: Vec<Option<usize>>,
}

/// The quotient of the free algebra by the ideal generated by the relations,
/// computed degree by degree.
#[derive(Clone, Debug)]
pub struct Quotient<F> {
    pub presentation: AlgebraPresentation<F>,
    monomial_relations: Vec<Monomial>,
    exponent_caps: Vec<Option<u32>>,
    levels: Vec<Level<F>>,
    basis_monomials: Vec<Monomial>,
    algebra: Arc<GradedAlgebra<F>>,
}

#[derive(Clone, Copy, Debug)]
pub struct QuotientOptions {
    pub monomial_budget: usize,
}

impl Default for QuotientOptions {
    fn default() -> Self {
        QuotientOptions { monomial_budget: DEFAULT_MONOMIAL_BUDGET }
    }
}

pub fn quotient<F: Field>(p: &AlgebraPresentation<F>) -> Result<Quotient<F>> {
    quotient_with(p, QuotientOptions::default())
}

pub fn quotient_with<F: Field>(p: &AlgebraPresentation<F>, opts: QuotientOptions) -> Result<Quotient<F>> {
    p.validate()?;
    let gens = &p.generators;
    let exterior = F::KIND.characteristic() != 2;

    // Single-term relations generate a monomial ideal; the quotient by it has
    // the monomials they do not divide as a basis, so they are applied first.
    let mut monomial_relations: Vec<Monomial> = Vec::new();
    let mut pending: Vec<Element<F>> = p.relations.iter().filter(|r| !r.is_zero()).cloned().collect();
    let mut poly_relations: Vec<Element<F>>;
    loop {
        poly_relations = Vec::new();
        let mut changed = false;
        for r in pending.drain(..) {
            let r = Element::from_terms(
                r.terms()
                    .filter(|(m, _)| !monomial_relations.iter().any(|mr| m.is_divisible_by(mr)))
                    .map(|(m, c)| (m.clone(), c.clone())),
            );
            match r.num_terms() {
                0 => {}
                1 => {
                    monomial_relations.push(r.terms().next().unwrap().0.clone());
                    changed = true;
                }
                _ => poly_relations.push(r),
            }
        }
        if !changed {
            break;
        }
        pending = std::mem::take(&mut poly_relations);
    }

    let mut exponent_caps: Vec<Option<u32>> = gens
        .iter()
        .map(|g| (exterior && g.is_odd()).then_some(1))
        .collect();
    for m in &monomial_relations {
        if let [(g, e)] = m.factors() {
            let cap = e - 1;
            let slot = &mut exponent_caps[*g as usize];
            *slot = Some(slot.map_or(cap, |c| c.min(cap)));
        }
    }
    let top = match p.top_degree {
        Some(t) => t,
        None => {
            if exponent_caps.iter().any(Option::is_none) {
                return Err(Error::Rejected(
                    "presentation has generators with unbounded powers; top_degree is required".into(),
                ));
            }
            gens.iter().map(|g| g.degree * exponent_caps[g.id].unwrap()).sum()
        }
    } as usize;

    let mut levels: Vec<Level<F>> = Vec::with_capacity(top + 1);
    let mut basis_monomials = Vec::new();
    let mut dims = Vec::with_capacity(top + 1);
    for d in 0..=top {
        let monomials = enumerate_monomials(gens, &exponent_caps, &monomial_relations, d as u32, opts.monomial_budget)?;
        let index: HashMap<Monomial, usize> = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let to_vec = |e: &Element<F>| -> Vector<F> {
            Vector::from_entries(e.terms().filter_map(|(m, c)| index.get(m).map(|&i| (i, c.clone()))).collect())
        };
        let mut builder = EchelonBuilder::new();
        for r in &poly_relations {
            if gens.element_degree(r)? == Some(d as u32) {
                builder.insert(to_vec(r));
            }
        }
        for g in gens.iter() {
            let e = g.degree as usize;
            if e > d || builder.rank() == monomials.len() {
                continue;
            }
            let lower = &levels[d - e];
            let gm = Monomial::generator(g.id);
            for row in lower.ideal.rows() {
                if builder.rank() == monomials.len() {
                    break;
                }
                let mut entries = Vec::with_capacity(row.len());
                for (col, c) in row.iter() {
                    if let Some((neg, m)) = gens.mul_monomials(F::KIND, &gm, &lower.monomials[*col]) {
                        if let Some(&i) = index.get(&m) {
                            entries.push((i, if neg { c.neg() } else { c.clone() }));
                        }
                    }
                }
                builder.insert(Vector::from_entries(entries));
            }
        }
        let ideal = builder.finish();
        let mut basis_of_column = vec![None; monomials.len()];
        let mut dim = 0;
        for (col, m) in monomials.iter().enumerate() {
            if !ideal.is_pivot(&col) {
                basis_of_column[col] = Some(basis_monomials.len());
                basis_monomials.push(m.clone());
                dim += 1;
            }
        }
        dims.push(dim);
        levels.push(Level { monomials, index, ideal, basis_of_column });
    }

    let mut q = Quotient {
        presentation: p.clone(),
        monomial_relations,
        exponent_caps,
        levels,
        basis_monomials,
        algebra: Arc::new(GradedAlgebra::from_table("", &[1], vec!["1".into()], vec![], HashMap::new())?),
    };
    q.algebra = Arc::new(q.build_algebra(&dims)?);
    Ok(q)
}

fn enumerate_monomials(
    gens: &GeneratorSet,
    caps: &[Option<u32>],
    monomial_relations: &[Monomial],
    degree: u32,
    budget: usize,
) -> Result<Vec<Monomial>> {
    fn rec(
        gens: &GeneratorSet,
        caps: &[Option<u32>],
        rels: &[Monomial],
        g: usize,
        remaining: u32,
        current: &mut Vec<(u32, u32)>,
        out: &mut Vec<Monomial>,
        budget: usize,
        degree: u32,
    ) -> Result<()> {
        if remaining == 0 {
            let m = Monomial::from_factors(current.clone());
            if !rels.iter().any(|r| m.is_divisible_by(r)) {
                if out.len() >= budget {
                    return Err(Error::Resource {
                        what: format!("free monomials in degree {degree}"),
                        size: out.len() + 1,
                        limit: budget,
                        partial: None,
                    });
                }
                out.push(m);
            }
            return Ok(());
        }
        if g == gens.len() {
            return Ok(());
        }
        let deg = gens.degree(g);
        let max_e = remaining / deg;
        let max_e = caps[g].map_or(max_e, |c| c.min(max_e));
        for e in 0..=max_e {
            if e > 0 {
                current.push((g as u32, e));
            }
            rec(gens, caps, rels, g + 1, remaining - e * deg, current, out, budget, degree)?;
            if e > 0 {
                current.pop();
            }
        }
        Ok(())
    }
    let mut out = Vec::new();
    rec(gens, caps, monomial_relations, 0, degree, &mut Vec::new(), &mut out, budget, degree)?;
    out.sort();
    Ok(out)
}

impl<F: Field> Quotient<F> {
    pub fn algebra(&self) -> &Arc<GradedAlgebra<F>> {
        &self.algebra
    }

    pub fn generators(&self) -> &Arc<GeneratorSet> {
        &self.presentation.generators
    }

    pub fn hilbert_series(&self) -> Vec<usize> {
        self.algebra.hilbert_series()
    }

    /// Normal monomial of each basis element.
    pub fn basis_monomials(&self) -> &[Monomial] {
        &self.basis_monomials
    }

    pub fn basis_index(&self, m: &Monomial) -> Option<usize> {
        let d = self.generators().monomial_degree(m) as usize;
        let level = self.levels.get(d)?;
        level.index.get(m).and_then(|&c| level.basis_of_column[c])
    }

    /// Dimension of the ideal in each degree.
    pub fn ideal_dims(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.ideal.rank()).collect()
    }

    /// Number of free monomials (modulo monomial relations) in each degree.
    pub fn ambient_dims(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.monomials.len()).collect()
    }

    fn kills(&self, m: &Monomial) -> bool {
        m.factors()
            .iter()
            .any(|&(g, e)| self.exponent_caps[g as usize].is_some_and(|c| e > c))
            || self.monomial_relations.iter().any(|r| m.is_divisible_by(r))
    }

    /// Reduces an element of the free algebra to the quotient basis.
    pub fn normal_form(&self, e: &Element<F>) -> Result<Vector<F>> {
        self.generators().check(e)?;
        let mut by_degree: HashMap<usize, Vec<(usize, F)>> = HashMap::new();
        for (m, c) in e.terms() {
            let d = self.generators().monomial_degree(m) as usize;
            if d >= self.levels.len() || self.kills(m) {
                continue;
            }
            let col = self.levels[d].index[m];
            by_degree.entry(d).or_default().push((col, c.clone()));
        }
        let mut out = Vec::new();
        for (d, entries) in by_degree {
            let level = &self.levels[d];
            let r = level.ideal.reduce(&Vector::from_entries(entries));
            for (col, c) in r.iter() {
                out.push((level.basis_of_column[*col].expect("residue on normal monomial"), c.clone()));
            }
        }
        Ok(Vector::from_entries(out))
    }

    /// Writes a quotient element back as a combination of normal monomials.
    pub fn lift(&self, v: &Vector<F>) -> Element<F> {
        Element::from_terms(v.iter().map(|(i, c)| (self.basis_monomials[*i].clone(), c.clone())))
    }

    pub fn generator_image(&self, name: &str) -> Result<Vector<F>> {
        self.normal_form(&self.presentation.generator(name)?)
    }

    /// Whether `e` lies in the ideal.
    pub fn is_zero(&self, e: &Element<F>) -> Result<bool> {
        Ok(self.normal_form(e)?.is_zero())
    }

    /// The degree-`d` part of the ideal as a span of free-algebra elements.
    pub fn ideal_in_degree(&self, d: usize) -> Subspace<Monomial, F> {
        let Some(level) = self.levels.get(d) else { return Subspace::new() };
        Subspace::span(level.ideal.rows().iter().map(|r| r.map_keys(|c| level.monomials[*c].clone())))
    }

    fn build_algebra(&self, dims: &[usize]) -> Result<GradedAlgebra<F>> {
        let gens = self.generators();
        let labels: Vec<String> = self.basis_monomials.iter().map(|m| gens.monomial_name(m)).collect();
        let mut offsets = vec![0];
        for d in dims {
            offsets.push(offsets.last().unwrap() + d);
        }
        let top = dims.len() - 1;
        let mut table = HashMap::new();
        for i in 1..self.basis_monomials.len() {
            let di = offsets.partition_point(|&o| o <= i) - 1;
            for j in 1..self.basis_monomials.len() {
                let dj = offsets.partition_point(|&o| o <= j) - 1;
                if di + dj > top {
                    break;
                }
                if let Some((neg, m)) = gens.mul_monomials(F::KIND, &self.basis_monomials[i], &self.basis_monomials[j]) {
                    let c = F::sign(neg);
                    let v = self.normal_form(&Element::monomial(m, c))?;
                    if !v.is_zero() {
                        table.insert((i, j), v);
                    }
                }
            }
        }
        let gen_images = gens
            .iter()
            .map(|g| self.normal_form(&Element::generator(g.id)))
            .collect::<Result<Vec<_>>>()?;
        GradedAlgebra::from_table(self.presentation.name.clone(), dims, labels, gen_images, table)
    }

    /// Degree-`d` ideal rows re-expressed as free monomials, for cross checks.
    pub fn ideal_rows(&self, d: usize) -> Vec<SparseVec<Monomial, F>> {
        self.ideal_in_degree(d).rows().to_vec()
    }
}

// ---------------------------------------------------------------------------
// JSON presentation files

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct PresentationFile {
    pub field: FieldKind,
    pub generators: Vec<GeneratorEntry>,
    pub relations: Vec<Vec<TermEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub top_degree: Option<u32>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct GeneratorEntry {
    pub name: String,
    pub degree: u32,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct TermEntry {
    pub coeff: String,
    pub monomial: Vec<String>,
}

impl PresentationFile {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    /// Builds the presentation; the file's field must match `F`.
    pub fn to_presentation<F: Field>(&self, name: &str) -> Result<AlgebraPresentation<F>> {
        if self.field != F::KIND {
            return Err(Error::Structural(format!("file is over {} but {} was requested", self.field, F::KIND)));
        }
        let gens = GeneratorSet::new(self.generators.iter().map(|g| (g.name.clone(), g.degree)))?;
        let mut relations = Vec::new();
        for rel in &self.relations {
            let mut e = Element::zero();
            for t in rel {
                let c = F::parse(&t.coeff)?;
                let mut term = Element::constant(c);
                for name in &t.monomial {
                    let id = gens
                        .id(name)
                        .ok_or_else(|| Error::Structural(format!("relation uses unknown generator {name}")))?;
                    term = gens.multiply(&term, &Element::generator(id))?;
                }
                e = e.add(&term);
            }
            relations.push(e);
        }
        AlgebraPresentation::new(name, gens, relations, self.top_degree)
    }

    pub fn from_presentation<F: Field>(p: &AlgebraPresentation<F>) -> Self {
        let gens = &p.generators;
        PresentationFile {
            field: F::KIND,
            generators: gens.iter().map(|g| GeneratorEntry { name: g.name.clone(), degree: g.degree }).collect(),
            relations: p
                .relations
                .iter()
                .map(|r| {
                    r.terms()
                        .map(|(m, c)| TermEntry {
                            coeff: c.to_string(),
                            monomial: m
                                .factors()
                                .iter()
                                .flat_map(|&(g, e)| std::iter::repeat(gens.get(g as usize).name.clone()).take(e as usize))
                                .collect(),
                        })
                        .collect()
                })
                .collect(),
            top_degree: p.top_degree,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Gf2, Rational};

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn truncated_polynomial_ring_mod_two() {
        let gens = GeneratorSet::new([("alpha", 1)]).unwrap();
        let a4 = Element::<Gf2>::monomial(Monomial::from_factors(vec![(0, 4)]), Gf2(true));
        let p = AlgebraPresentation::new("Z2[a]/a^4", gens, vec![a4], Some(4)).unwrap();
        let qt = quotient(&p).unwrap();
        assert_eq!(qt.algebra().hilbert_series(), vec![1, 1, 1, 1]);
        assert_eq!(qt.algebra().dim_in_degree(4), 0);
    }

    #[test]
    fn even_generator_without_top_degree_is_rejected() {
        let gens = GeneratorSet::new([("w", 2)]).unwrap();
        let p = AlgebraPresentation::<Rational>::new("Q[w]", gens, vec![], None).unwrap();
        assert!(matches!(quotient(&p), Err(Error::Rejected(_))));
    }

    #[test]
    fn inhomogeneous_relation_is_rejected() {
        let gens = GeneratorSet::new([("a", 1), ("b", 1)]).unwrap();
        let a = Element::<Rational>::generator(0);
        let ab = gens.multiply(&a, &Element::generator(1)).unwrap();
        let bad = a.add(&ab);
        assert!(matches!(AlgebraPresentation::new("bad", gens, vec![bad], None), Err(Error::Rejected(_))));
    }

    #[test]
    fn json_round_trip_and_literals() {
        let text = r#"{"field":"Q","generators":[{"name":"a","degree":1},{"name":"b","degree":1}],
            "relations":[[{"coeff":"1","monomial":["b","a"]},{"coeff":"-1/2","monomial":["a","b"]}]]}"#;
        let file = PresentationFile::parse(text).unwrap();
        let p: AlgebraPresentation<Rational> = file.to_presentation("t").unwrap();
        // ba - ab/2 = -3/2 ab
        assert_eq!(p.relations[0], p.word(&["a", "b"]).unwrap().scale(&Rational::new(-3, 2)));
        let again = PresentationFile::from_presentation(&p);
        let p2: AlgebraPresentation<Rational> = again.to_presentation("t").unwrap();
        assert_eq!(p2.relations, p.relations);
        assert!(file.to_presentation::<Gf2>("t").is_err());
        let bad = text.replace("-1/2", "0.5");
        assert!(PresentationFile::parse(&bad).unwrap().to_presentation::<Rational>("t").is_err());
    }

    #[test]
    fn normal_form_of_generator_relation() {
        let gens = GeneratorSet::new([("a", 1), ("b", 1)]).unwrap();
        let ab = gens.multiply(&Element::<Rational>::generator(0), &Element::generator(1)).unwrap();
        let p = AlgebraPresentation::new("E/ab", gens, vec![ab.scale(&q(3))], None).unwrap();
        let qt = quotient(&p).unwrap();
        assert_eq!(qt.hilbert_series(), vec![1, 2]);
        assert!(qt.is_zero(&ab).unwrap());
    }
}
