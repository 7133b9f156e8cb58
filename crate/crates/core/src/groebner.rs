//! Gröbner-basis verification in exterior algebras.
//!
//! All generators have degree one and square to zero; monomials are bit
//! masks over generator ids. The check follows the exterior Buchberger
//! criterion: S-pairs of all pairs plus x_i·f for x_i in the leading
//! monomial of f must reduce to zero. No completion is attempted.

use std::cmp::Ordering;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{Element, GeneratorSet, Monomial};

const MAX_GENERATORS: usize = 63;
const MAX_ENUMERATED_GENERATORS: usize = 26;

/// Degree-lexicographic order with a generator priority.
///
/// `priority` lists generator ids from lowest to highest priority. For
/// monomials of equal degree, S > T iff the highest-priority generator of
/// the symmetric difference lies in S.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermOrder {
    pub priority: Vec<usize>,
}

impl TermOrder {
    /// Priority equal to generator id order.
    pub fn identity(k: usize) -> Self {
        TermOrder { priority: (0..k).collect() }
    }

    pub fn reversed(&self) -> Self {
        TermOrder { priority: self.priority.iter().rev().copied().collect() }
    }

    /// Parses `default`, `reverse`, or generator names from lowest to
    /// highest priority separated by `<` or `,`.
    pub fn parse(spec: &str, gens: &GeneratorSet) -> Result<Self> {
        match spec.trim() {
            "default" => Ok(Self::identity(gens.len())),
            "reverse" => Ok(Self::identity(gens.len()).reversed()),
            s => {
                let priority = s
                    .split(['<', ','])
                    .map(|name| gens.id(name.trim()).ok_or_else(|| Error::Parse(format!("unknown generator {name:?}"))))
                    .collect::<Result<Vec<_>>>()?;
                let order = TermOrder { priority };
                order.validate(gens.len())?;
                Ok(order)
            }
        }
    }

    fn validate(&self, k: usize) -> Result<()> {
        let mut seen = vec![false; k];
        for &g in &self.priority {
            if g >= k || std::mem::replace(&mut seen[g], true) {
                return Err(Error::Parse("term order must be a permutation of the generators".into()));
            }
        }
        if self.priority.len() != k {
            return Err(Error::Parse("term order must list every generator".into()));
        }
        Ok(())
    }

    pub fn describe(&self, gens: &GeneratorSet) -> String {
        self.priority.iter().map(|&g| gens.get(g).name.as_str()).collect::<Vec<_>>().join("<")
    }
}

/// Order key: (degree, mask re-indexed by priority rank).
#[derive(Clone, Debug)]
struct OrderKey {
    rank_bit: Vec<u64>,
}

impl OrderKey {
    fn new(order: &TermOrder) -> Self {
        let mut rank_bit = vec![0; order.priority.len()];
        for (rank, &g) in order.priority.iter().enumerate() {
            rank_bit[g] = 1u64 << rank;
        }
        OrderKey { rank_bit }
    }

    fn key(&self, mask: u64) -> (u32, u64) {
        let mut ranked = 0;
        let mut m = mask;
        while m != 0 {
            let g = m.trailing_zeros() as usize;
            ranked |= self.rank_bit[g];
            m &= m - 1;
        }
        (mask.count_ones(), ranked)
    }

    fn cmp(&self, a: u64, b: u64) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }
}

/// Sign of the exterior product of monomials `a` and `b`: the parity of
/// pairs (s ∈ a, t ∈ b) with s > t. `None` if they share a generator.
fn ext_mul(a: u64, b: u64) -> Option<bool> {
    if a & b != 0 {
        return None;
    }
    let mut neg = false;
    let mut m = b;
    while m != 0 {
        let t = m.trailing_zeros();
        let above = a >> t >> 1;
        neg ^= above.count_ones() % 2 == 1;
        m &= m - 1;
    }
    Some(neg)
}

/// A polynomial as terms sorted by decreasing order key.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Poly<F> {
    terms: Vec<(u64, F)>,
}

impl<F: Field> Poly<F> {
    fn from_terms(mut terms: Vec<(u64, F)>, key: &OrderKey) -> Self {
        terms.sort_by(|x, y| key.cmp(y.0, x.0));
        let mut out: Vec<(u64, F)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = lc.add(&c),
                _ => out.push((m, c)),
            }
            if out.last().is_some_and(|(_, c)| c.is_zero()) {
                out.pop();
            }
        }
        Poly { terms: out }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn leading(&self) -> Option<&(u64, F)> {
        self.terms.first()
    }

    /// c · m · self.
    fn mul_monomial(&self, m: u64, c: &F, key: &OrderKey) -> Self {
        let terms = self
            .terms
            .iter()
            .filter_map(|(t, ct)| ext_mul(m, *t).map(|neg| (m | t, F::sign(neg).mul(c).mul(ct))))
            .collect();
        Poly::from_terms(terms, key)
    }

    fn sub(&self, other: &Self, key: &OrderKey) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().map(|(m, c)| (*m, c.neg())));
        Poly::from_terms(terms, key)
    }
}

/// Which reducer and which term to use when several apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionStrategy {
    /// Reduce the largest reducible term by the first matching element.
    LeadingFirst,
    /// Reduce the largest reducible term by the last matching element.
    LeadingLast,
    /// Reduce the smallest reducible term first.
    Smallest,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpairEntry {
    pub pair: String,
    pub remainder: String,
    pub zero: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GbReport {
    pub is_groebner: bool,
    pub order: String,
    pub leading_monomials: Vec<String>,
    pub spair_log: Vec<SpairEntry>,
    /// Monomials with no leading-monomial divisor, per degree.
    pub normal_monomial_counts: Vec<usize>,
}

/// A fixed set of exterior polynomials under a term order.
pub struct ExteriorSystem<F> {
    gens: Arc<GeneratorSet>,
    order: TermOrder,
    key: OrderKey,
    polys: Vec<Poly<F>>,
}

impl<F: Field> ExteriorSystem<F> {
    pub fn new(gens: Arc<GeneratorSet>, relations: &[Element<F>], order: TermOrder) -> Result<Self> {
        if gens.iter().any(|g| g.degree != 1) {
            return Err(Error::Unsupported("exterior Gröbner check needs all generators in degree one".into()));
        }
        if gens.len() > MAX_GENERATORS {
            return Err(Error::Resource { what: "exterior generators".into(), size: gens.len(), limit: MAX_GENERATORS, partial: None });
        }
        order.validate(gens.len())?;
        let key = OrderKey::new(&order);
        let mut polys = Vec::new();
        for r in relations {
            gens.check(r)?;
            gens.element_degree(r)?;
            let p = Poly::from_terms(r.terms().filter_map(|(m, c)| to_mask(m).map(|b| (b, c.clone()))).collect(), &key);
            if !p.is_zero() {
                polys.push(p);
            }
        }
        Ok(ExteriorSystem { gens, order, key, polys })
    }

    fn element(&self, p: &Poly<F>) -> Element<F> {
        Element::from_terms(p.terms.iter().map(|(m, c)| (from_mask(*m), c.clone())))
    }

    fn poly(&self, e: &Element<F>) -> Poly<F> {
        Poly::from_terms(e.terms().filter_map(|(m, c)| to_mask(m).map(|b| (b, c.clone()))).collect(), &self.key)
    }

    fn reduce_poly(&self, f: &Poly<F>, strategy: ReductionStrategy) -> Poly<F> {
        let mut f = f.clone();
        let mut done: Vec<(u64, F)> = Vec::new();
        loop {
            let pick = match strategy {
                ReductionStrategy::Smallest => f.terms.iter().rev().find_map(|(t, c)| self.divisor(*t, false).map(|g| (*t, c.clone(), g))),
                _ => {
                    // Move irreducible leading terms to the remainder.
                    while let Some((t, c)) = f.leading().cloned() {
                        if self.divisor(t, strategy == ReductionStrategy::LeadingLast).is_some() {
                            break;
                        }
                        done.push((t, c));
                        f.terms.remove(0);
                    }
                    f.leading().cloned().map(|(t, c)| {
                        let g = self.divisor(t, strategy == ReductionStrategy::LeadingLast).unwrap();
                        (t, c, g)
                    })
                }
            };
            let Some((t, c, g)) = pick else { break };
            let g = &self.polys[g];
            let (lm, lc) = g.leading().unwrap();
            let m = t & !lm;
            let neg = ext_mul(m, *lm).expect("disjoint by construction");
            let scale = c.div(&F::sign(neg).mul(lc)).expect("nonzero leading coefficient");
            f = f.sub(&g.mul_monomial(m, &scale, &self.key), &self.key);
        }
        done.extend(f.terms);
        Poly::from_terms(done, &self.key)
    }

    fn divisor(&self, t: u64, last: bool) -> Option<usize> {
        let hit = |p: &Poly<F>| p.leading().is_some_and(|(lm, _)| t & lm == *lm);
        if last {
            self.polys.iter().rposition(hit)
        } else {
            self.polys.iter().position(hit)
        }
    }

    /// Full reduction modulo the system.
    pub fn reduce(&self, e: &Element<F>) -> Element<F> {
        self.reduce_with(e, ReductionStrategy::LeadingFirst)
    }

    pub fn reduce_with(&self, e: &Element<F>, strategy: ReductionStrategy) -> Element<F> {
        self.element(&self.reduce_poly(&self.poly(e), strategy))
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().map(|p| from_mask(p.leading().unwrap().0)).collect()
    }

    fn s_polynomial(&self, f: &Poly<F>, g: &Poly<F>) -> Poly<F> {
        let (lf, cf) = f.leading().unwrap();
        let (lg, cg) = g.leading().unwrap();
        let l = lf | lg;
        let a = f.mul_monomial(l & !lf, &F::one(), &self.key);
        let b = g.mul_monomial(l & !lg, &F::one(), &self.key);
        // Leading coefficients of a and b carry the reordering signs.
        let ca = a.leading().map(|x| x.1.clone()).unwrap_or_else(|| cf.clone());
        let cb = b.leading().map(|x| x.1.clone()).unwrap_or_else(|| cg.clone());
        let left = a.mul_monomial(0, &cb, &self.key);
        let right = b.mul_monomial(0, &ca, &self.key);
        left.sub(&right, &self.key)
    }

    pub fn check(&self) -> Result<GbReport> {
        let name = |p: &Poly<F>| self.gens.element_name(&self.element(p));
        let mut log = Vec::new();
        for i in 0..self.polys.len() {
            for j in i + 1..self.polys.len() {
                let s = self.s_polynomial(&self.polys[i], &self.polys[j]);
                let r = self.reduce_poly(&s, ReductionStrategy::LeadingFirst);
                log.push(SpairEntry {
                    pair: format!("S({}, {})", name(&self.polys[i]), name(&self.polys[j])),
                    zero: r.is_zero(),
                    remainder: name(&r),
                });
            }
            let (lm, _) = self.polys[i].leading().unwrap();
            let mut m = *lm;
            while m != 0 {
                let g = m.trailing_zeros();
                let xf = self.polys[i].mul_monomial(1 << g, &F::one(), &self.key);
                let r = self.reduce_poly(&xf, ReductionStrategy::LeadingFirst);
                log.push(SpairEntry {
                    pair: format!("{}·({})", self.gens.get(g as usize).name, name(&self.polys[i])),
                    zero: r.is_zero(),
                    remainder: name(&r),
                });
                m &= m - 1;
            }
        }
        Ok(GbReport {
            is_groebner: log.iter().all(|e| e.zero),
            order: self.order.describe(&self.gens),
            leading_monomials: self.leading_monomials().iter().map(|m| self.gens.monomial_name(m)).collect(),
            spair_log: log,
            normal_monomial_counts: self.normal_monomial_counts()?,
        })
    }

    fn normal_monomial_counts(&self) -> Result<Vec<usize>> {
        let k = self.gens.len();
        if k > MAX_ENUMERATED_GENERATORS {
            return Err(Error::Resource { what: "normal monomial enumeration".into(), size: k, limit: MAX_ENUMERATED_GENERATORS, partial: None });
        }
        let lms: Vec<u64> = self.polys.iter().map(|p| p.leading().unwrap().0).collect();
        let mut counts = vec![0; k + 1];
        for mask in 0u64..(1 << k) {
            if !lms.iter().any(|lm| mask & lm == *lm) {
                counts[mask.count_ones() as usize] += 1;
            }
        }
        while counts.last() == Some(&0) {
            counts.pop();
        }
        Ok(counts)
    }
}

fn to_mask(m: &Monomial) -> Option<u64> {
    let mut mask = 0;
    for &(g, e) in m.factors() {
        if e > 1 {
            return None;
        }
        mask |= 1u64 << g;
    }
    Some(mask)
}

fn from_mask(mut mask: u64) -> Monomial {
    let mut f = Vec::new();
    while mask != 0 {
        f.push((mask.trailing_zeros(), 1));
        mask &= mask - 1;
    }
    Monomial::from_factors(f)
}

pub fn buchberger_check<F: Field>(gens: &Arc<GeneratorSet>, relations: &[Element<F>], order: &TermOrder) -> Result<GbReport> {
    ExteriorSystem::new(gens.clone(), relations, order.clone())?.check()
}

/// Tries `order`, then its reversal; returns the first report that passes,
/// or the report for `order` if neither does.
pub fn buchberger_check_with_fallback<F: Field>(
    gens: &Arc<GeneratorSet>,
    relations: &[Element<F>],
    order: &TermOrder,
) -> Result<GbReport> {
    let first = buchberger_check(gens, relations, order)?;
    if first.is_groebner {
        return Ok(first);
    }
    let second = buchberger_check(gens, relations, &order.reversed())?;
    Ok(if second.is_groebner { second } else { first })
}

pub fn gb_hilbert(report: &GbReport) -> Result<Vec<usize>> {
    if !report.is_groebner {
        return Err(Error::Contract("Hilbert series from leading terms needs a Gröbner basis".into()));
    }
    Ok(report.normal_monomial_counts.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    #[test]
    fn exterior_signs() {
        assert_eq!(ext_mul(0b01, 0b10), Some(false));
        assert_eq!(ext_mul(0b10, 0b01), Some(true));
        assert_eq!(ext_mul(0b110, 0b001), Some(false));
        assert_eq!(ext_mul(0b1, 0b1), None);
    }

    #[test]
    fn empty_system_counts_binomials() {
        let gens = Arc::new(GeneratorSet::new((0..5).map(|i| (format!("e{i}"), 1))).unwrap());
        let r = buchberger_check::<Rational>(&gens, &[], &TermOrder::identity(5)).unwrap();
        assert!(r.is_groebner);
        assert_eq!(gb_hilbert(&r).unwrap(), vec![1, 5, 10, 10, 5, 1]);
    }

    #[test]
    fn even_generator_unsupported() {
        let gens = Arc::new(GeneratorSet::new([("w", 2)]).unwrap());
        assert!(matches!(buchberger_check::<Rational>(&gens, &[], &TermOrder::identity(1)), Err(Error::Unsupported(_))));
    }
}
