//! Monomials and elements of the free graded-commutative algebra on a set of
//! graded generators, with Koszul signs.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Field, FieldKind};
use crate::linalg::{SparseVec, Subspace};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub id: usize,
    pub name: String,
    pub degree: u32,
}

impl Generator {
    pub fn is_odd(&self) -> bool {
        self.degree % 2 == 1
    }
}

/// Generators with dense ids `0..len`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    gens: Vec<Generator>,
    by_name: HashMap<String, usize>,
}

impl GeneratorSet {
    pub fn new<S: Into<String>>(gens: impl IntoIterator<Item = (S, u32)>) -> Result<Self> {
        let mut out = Vec::new();
        let mut by_name = HashMap::new();
        for (id, (name, degree)) in gens.into_iter().enumerate() {
            let name = name.into();
            if degree == 0 {
                return Err(Error::Rejected(format!("generator {name} has degree 0")));
            }
            if by_name.insert(name.clone(), id).is_some() {
                return Err(Error::Rejected(format!("duplicate generator name {name}")));
            }
            out.push(Generator { id, name, degree });
        }
        Ok(GeneratorSet { gens: out, by_name })
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn get(&self, id: usize) -> &Generator {
        &self.gens[id]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Generator> + '_ {
        self.gens.iter()
    }

    pub fn id(&self, name: &str) -> Option<usize> {
        self.by_name.get(name).copied()
    }

    pub fn degree(&self, id: usize) -> u32 {
        self.gens[id].degree
    }

    pub fn monomial_degree(&self, m: &Monomial) -> u32 {
        m.factors().iter().map(|&(g, e)| self.gens[g as usize].degree * e).sum()
    }

    /// Product of two monomials in the free graded-commutative algebra.
    ///
    /// Returns `None` when the product vanishes (an odd generator meeting
    /// itself in characteristic other than two), otherwise the sign flag
    /// (`true` = negative) and the canonical monomial.
    pub fn mul_monomials(&self, field: FieldKind, a: &Monomial, b: &Monomial) -> Option<(bool, Monomial)> {
        let exterior = field.characteristic() != 2;
        let (fa, fb) = (a.factors(), b.factors());
        let mut out = Vec::with_capacity(fa.len() + fb.len());
        let mut parity = false;
        // Odd total degree of the factors of `a` with id greater than the
        // current generator of `b`; each such crossing contributes a sign.
        let mut odd_suffix: Vec<bool> = vec![false; fa.len() + 1];
        for i in (0..fa.len()).rev() {
            let (g, e) = fa[i];
            odd_suffix[i] = odd_suffix[i + 1] ^ (self.gens[g as usize].degree * e % 2 == 1);
        }
        let (mut i, mut j) = (0, 0);
        while i < fa.len() || j < fb.len() {
            let take_a = j == fb.len() || (i < fa.len() && fa[i].0 <= fb[j].0);
            let take_b = i == fa.len() || (j < fb.len() && fb[j].0 <= fa[i].0);
            if take_a && take_b {
                let (g, ea) = fa[i];
                let eb = fb[j].1;
                let gen = &self.gens[g as usize];
                if exterior && gen.is_odd() {
                    return None;
                }
                // b's factor passes the factors of a strictly after position i.
                if gen.degree * eb % 2 == 1 && odd_suffix[i + 1] {
                    parity ^= true;
                }
                out.push((g, ea + eb));
                i += 1;
                j += 1;
            } else if take_a {
                out.push(fa[i]);
                i += 1;
            } else {
                let (g, eb) = fb[j];
                if self.gens[g as usize].degree * eb % 2 == 1 && odd_suffix[i] {
                    parity ^= true;
                }
                out.push((g, eb));
                j += 1;
            }
        }
        Some((parity, Monomial(out)))
    }

    /// Multiplies two elements of the free algebra.
    pub fn multiply<F: Field>(&self, a: &Element<F>, b: &Element<F>) -> Result<Element<F>> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.multiply_unchecked(a, b))
    }

    pub(crate) fn multiply_unchecked<F: Field>(&self, a: &Element<F>, b: &Element<F>) -> Element<F> {
        let mut terms: BTreeMap<Monomial, F> = BTreeMap::new();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                if let Some((neg, m)) = self.mul_monomials(F::KIND, ma, mb) {
                    let c = ca.mul(cb);
                    let c = if neg { c.neg() } else { c };
                    let slot = terms.entry(m).or_insert_with(F::zero);
                    *slot = slot.add(&c);
                }
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Element { terms }
    }

    pub fn product<F: Field>(&self, factors: &[Element<F>]) -> Result<Element<F>> {
        let mut acc = Element::one();
        for f in factors {
            acc = self.multiply(&acc, f)?;
        }
        Ok(acc)
    }

    pub fn check<F: Field>(&self, e: &Element<F>) -> Result<()> {
        for m in e.terms.keys() {
            if let Some(&(g, _)) = m.0.iter().find(|(g, _)| *g as usize >= self.gens.len()) {
                return Err(Error::Structural(format!(
                    "generator id {g} not in a set of {} generators",
                    self.gens.len()
                )));
            }
        }
        Ok(())
    }

    /// Degree of a homogeneous nonzero element; `None` for zero, error if mixed.
    pub fn element_degree<F: Field>(&self, e: &Element<F>) -> Result<Option<u32>> {
        let mut deg = None;
        for m in e.terms.keys() {
            let d = self.monomial_degree(m);
            match deg {
                None => deg = Some(d),
                Some(x) if x != d => {
                    return Err(Error::Structural(format!("element is not homogeneous (degrees {x} and {d})")))
                }
                _ => {}
            }
        }
        Ok(deg)
    }

    pub fn monomial_name(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".into();
        }
        let mut s = String::new();
        for &(g, e) in m.factors() {
            s.push_str(&self.gens[g as usize].name);
            if e > 1 {
                let _ = write!(s, "^{e}");
            }
        }
        s
    }

    pub fn element_name<F: Field>(&self, e: &Element<F>) -> String {
        format_terms(e.terms.iter().map(|(m, c)| (self.monomial_name(m), c)))
    }

    /// Algebra homomorphism of free algebras sending generator `i` to
    /// `images[i]` (elements over `target`).
    pub fn substitute<F: Field>(&self, target: &GeneratorSet, e: &Element<F>, images: &[Element<F>]) -> Result<Element<F>> {
        if images.len() != self.len() {
            return Err(Error::Structural("substitution needs one image per generator".into()));
        }
        let mut out = Element::zero();
        for (m, c) in &e.terms {
            let mut acc = Element::constant(c.clone());
            for &(g, ex) in m.factors() {
                for _ in 0..ex {
                    acc = target.multiply(&acc, &images[g as usize])?;
                }
            }
            out = out.add(&acc);
        }
        Ok(out)
    }
}

/// Formats `c1 m1 + c2 m2 - ...` with unit coefficients suppressed.
pub fn format_terms<'a, F: Field + 'a>(terms: impl Iterator<Item = (String, &'a F)>) -> String {
    let mut s = String::new();
    for (name, c) in terms {
        let cs = c.to_string();
        let (neg, mag) = match cs.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, cs),
        };
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if mag != "1" {
            s.push_str(&mag);
            if name != "1" {
                s.push('·');
            }
            if name != "1" {
                s.push_str(&name);
            }
        } else {
            s.push_str(&name);
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// A monomial: sorted `(generator id, exponent)` pairs with positive exponents.
///
/// Within one degree the derived order is lexicographic on the sorted
/// factor list; graded bases list monomials degree by degree in this order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<(u32, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn generator(id: usize) -> Self {
        Monomial(vec![(id as u32, 1)])
    }

    /// Builds a monomial from (id, exponent) pairs in any order.
    pub fn from_factors(mut f: Vec<(u32, u32)>) -> Self {
        f.retain(|&(_, e)| e > 0);
        f.sort();
        let mut out: Vec<(u32, u32)> = Vec::with_capacity(f.len());
        for (g, e) in f {
            match out.last_mut() {
                Some((lg, le)) if *lg == g => *le += e,
                _ => out.push((g, e)),
            }
        }
        Monomial(out)
    }

    pub fn factors(&self) -> &[(u32, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, id: usize) -> u32 {
        self.0
            .binary_search_by(|(g, _)| g.cmp(&(id as u32)))
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn total_exponent(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    /// Whether `other` divides `self` (as a commutative monomial).
    pub fn is_divisible_by(&self, other: &Monomial) -> bool {
        other.0.iter().all(|&(g, e)| self.exponent(g as usize) >= e)
    }
}

/// An element of a free graded-commutative algebra: a finite sum of
/// monomials with nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element<F> {
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> Default for Element<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Field> Element<F> {
    pub fn zero() -> Self {
        Element { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::one(), F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::monomial(Monomial::one(), c)
    }

    pub fn monomial(m: Monomial, c: F) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Element { terms }
    }

    pub fn generator(id: usize) -> Self {
        Self::monomial(Monomial::generator(id), F::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, F)>) -> Self {
        let mut e = Self::zero();
        for (m, c) in terms {
            e.add_term(m, c);
        }
        e
    }

    pub fn add_term(&mut self, m: Monomial, c: F) {
        let slot = self.terms.entry(m.clone()).or_insert_with(F::zero);
        *slot = slot.add(&c);
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> + '_ {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&F::one().neg())
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Element { terms: self.terms.iter().map(|(m, x)| (m.clone(), x.mul(c))).collect() }
    }

    pub fn to_sparse(&self) -> SparseVec<Monomial, F> {
        SparseVec::from_sorted(self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect())
    }

    pub fn from_sparse(v: &SparseVec<Monomial, F>) -> Self {
        Element { terms: v.iter().map(|(m, c)| (m.clone(), c.clone())).collect() }
    }
}

/// The span of homogeneous elements of one degree, in reduced echelon form
/// over the monomial basis.
#[derive(Clone, Debug)]
pub struct ElementSubspace<F> {
    pub gens: Arc<GeneratorSet>,
    pub degree: Option<u32>,
    pub space: Subspace<Monomial, F>,
}

impl<F: Field> ElementSubspace<F> {
    pub fn rank(&self) -> usize {
        self.space.rank()
    }

    pub fn rows(&self) -> Vec<Element<F>> {
        self.space.rows().iter().map(Element::from_sparse).collect()
    }

    /// Membership test; the residue is the canonical normal form of `e`
    /// modulo the span and is zero exactly for members.
    pub fn membership(&self, e: &Element<F>) -> Result<(bool, Element<F>)> {
        self.gens.check(e)?;
        if let (Some(d), Some(de)) = (self.degree, self.gens.element_degree(e)?) {
            if d != de {
                return Err(Error::Structural(format!("degree {de} element tested against degree {d} subspace")));
            }
        }
        let r = self.space.reduce(&e.to_sparse());
        Ok((r.is_zero(), Element::from_sparse(&r)))
    }
}

/// Echelonizes homogeneous elements of a common degree.
pub fn echelonize<F: Field>(gens: &Arc<GeneratorSet>, vectors: &[Element<F>]) -> Result<ElementSubspace<F>> {
    let mut degree = None;
    for v in vectors {
        gens.check(v)?;
        if let Some(d) = gens.element_degree(v)? {
            match degree {
                None => degree = Some(d),
                Some(x) if x != d => {
                    return Err(Error::Structural(format!("mixed degrees {x} and {d} in echelonize")))
                }
                _ => {}
            }
        }
    }
    Ok(ElementSubspace {
        gens: gens.clone(),
        degree,
        space: Subspace::span(vectors.iter().map(Element::to_sparse)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Gf2, Rational};
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn odd_generators_anticommute() {
        let g = GeneratorSet::new([("a", 1), ("b", 1), ("w", 2)]).unwrap();
        let a = Element::<Rational>::generator(0);
        let b = Element::<Rational>::generator(1);
        let w = Element::<Rational>::generator(2);
        let ab = g.multiply(&a, &b).unwrap();
        let ba = g.multiply(&b, &a).unwrap();
        assert_eq!(ab, ba.neg());
        assert!(g.multiply(&a, &a).unwrap().is_zero());
        assert_eq!(g.multiply(&w, &a).unwrap(), g.multiply(&a, &w).unwrap());
        assert_eq!(g.multiply(&w, &w).unwrap(), Element::monomial(Monomial::from_factors(vec![(2, 2)]), q(1)));
    }

    #[test]
    fn gf2_keeps_odd_squares() {
        let g = GeneratorSet::new([("alpha", 1)]).unwrap();
        let a = Element::<Gf2>::generator(0);
        let a2 = g.multiply(&a, &a).unwrap();
        assert_eq!(a2, Element::monomial(Monomial::from_factors(vec![(0, 2)]), Gf2(true)));
    }

    #[test]
    fn mismatched_generator_is_structural_error() {
        let g = GeneratorSet::new([("a", 1)]).unwrap();
        let bad = Element::<Rational>::generator(3);
        assert!(matches!(g.multiply(&bad, &Element::one()), Err(Error::Structural(_))));
    }

    #[test]
    fn echelonize_rejects_mixed_degrees() {
        let g = Arc::new(GeneratorSet::new([("a", 1), ("b", 1)]).unwrap());
        let a = Element::<Rational>::generator(0);
        let ab = g.multiply(&a, &Element::generator(1)).unwrap();
        assert!(matches!(echelonize(&g, &[a, ab]), Err(Error::Structural(_))));
    }

    fn arb_monomial(ngens: usize) -> impl Strategy<Value = Monomial> {
        proptest::collection::vec((0..ngens as u32, 1u32..3), 0..4).prop_map(Monomial::from_factors)
    }

    fn mixed_gens() -> GeneratorSet {
        GeneratorSet::new([("a", 1), ("b", 2), ("c", 3), ("d", 1), ("e", 2)]).unwrap()
    }

    proptest! {
        #[test]
        fn graded_commutativity(m1 in arb_monomial(5), m2 in arb_monomial(5)) {
            let g = mixed_gens();
            let e1 = Element::<Rational>::monomial(m1.clone(), q(1));
            let e2 = Element::<Rational>::monomial(m2.clone(), q(1));
            let sign = (g.monomial_degree(&m1) * g.monomial_degree(&m2)) % 2 == 1;
            let lhs = g.multiply(&e1, &e2).unwrap();
            let rhs = g.multiply(&e2, &e1).unwrap();
            prop_assert_eq!(lhs, if sign { rhs.neg() } else { rhs });
        }

        #[test]
        fn associativity(m1 in arb_monomial(5), m2 in arb_monomial(5), m3 in arb_monomial(5)) {
            let g = mixed_gens();
            let e = |m: &Monomial| Element::<Rational>::monomial(m.clone(), q(1));
            let l = g.multiply(&g.multiply(&e(&m1), &e(&m2)).unwrap(), &e(&m3)).unwrap();
            let r = g.multiply(&e(&m1), &g.multiply(&e(&m2), &e(&m3)).unwrap()).unwrap();
            prop_assert_eq!(l, r);
        }
    }
}
