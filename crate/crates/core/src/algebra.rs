//! Finite-dimensional graded algebras given by a basis and structure constants.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{invert, Subspace, Vector};
use crate::monomial::format_terms;

/// A graded-commutative algebra with a basis ordered by degree.
///
/// Basis index 0 is the unit. Elements are [`Vector`]s over basis indices.
#[derive(Clone, Debug)]
pub struct GradedAlgebra<F> {
    name: String,
    /// Basis indices of degree `d` are `offsets[d]..offsets[d + 1]`.
    offsets: Vec<usize>,
    labels: Vec<String>,
    generators: Vec<Vector<F>>,
    product: Product<F>,
}

#[derive(Clone, Debug)]
enum Product<F> {
    /// Nonzero products of non-unit basis elements.
    Table(HashMap<(usize, usize), Vector<F>>),
    /// Tensor product of two algebras with the Koszul sign rule.
    Tensor(Arc<GradedAlgebra<F>>, Arc<GradedAlgebra<F>>),
}

impl<F: Field> GradedAlgebra<F> {
    /// Assembles an algebra from per-degree basis labels and a product table.
    ///
    /// `dims[d]` is the dimension in degree `d`; `dims[0]` must be 1.
    pub fn from_table(
        name: impl Into<String>,
        dims: &[usize],
        labels: Vec<String>,
        generators: Vec<Vector<F>>,
        table: HashMap<(usize, usize), Vector<F>>,
    ) -> Result<Self> {
        if dims.first() != Some(&1) {
            return Err(Error::Structural("degree 0 must be one-dimensional".into()));
        }
        let offsets = offsets_from_dims(dims);
        if labels.len() != *offsets.last().unwrap() {
            return Err(Error::Structural("label count does not match dimensions".into()));
        }
        Ok(GradedAlgebra { name: name.into(), offsets, labels, generators, product: Product::Table(table) })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    /// Highest degree with a (possibly empty) basis slot.
    pub fn top_degree(&self) -> usize {
        self.offsets.len() - 2
    }

    pub fn dim_in_degree(&self, d: usize) -> usize {
        if d + 1 >= self.offsets.len() {
            0
        } else {
            self.offsets[d + 1] - self.offsets[d]
        }
    }

    pub fn degree_range(&self, d: usize) -> std::ops::Range<usize> {
        if d + 1 >= self.offsets.len() {
            let end = self.dim();
            end..end
        } else {
            self.offsets[d]..self.offsets[d + 1]
        }
    }

    pub fn degree_of(&self, index: usize) -> usize {
        self.offsets.partition_point(|&o| o <= index) - 1
    }

    /// Dimensions by degree with trailing zeros removed.
    pub fn hilbert_series(&self) -> Vec<usize> {
        let mut h: Vec<usize> = (0..=self.top_degree()).map(|d| self.dim_in_degree(d)).collect();
        while h.len() > 1 && *h.last().unwrap() == 0 {
            h.pop();
        }
        h
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Algebra generators (they generate the algebra multiplicatively).
    pub fn generators(&self) -> &[Vector<F>] {
        &self.generators
    }

    pub fn unit(&self) -> Vector<F> {
        Vector::unit(0)
    }

    pub fn basis_vector(&self, i: usize) -> Vector<F> {
        Vector::unit(i)
    }

    /// Degree of a homogeneous element; `None` for zero.
    pub fn degree(&self, v: &Vector<F>) -> Result<Option<usize>> {
        let mut deg = None;
        for (i, _) in v.iter() {
            let d = self.degree_of(*i);
            match deg {
                None => deg = Some(d),
                Some(x) if x != d => return Err(Error::Structural(format!("element mixes degrees {x} and {d}"))),
                _ => {}
            }
        }
        Ok(deg)
    }

    pub fn homogeneous_part(&self, v: &Vector<F>, d: usize) -> Vector<F> {
        let r = self.degree_range(d);
        Vector::from_sorted(v.iter().filter(|(i, _)| r.contains(i)).map(|(i, c)| (*i, c.clone())).collect())
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> Vector<F> {
        if i == 0 {
            return Vector::unit(j);
        }
        if j == 0 {
            return Vector::unit(i);
        }
        match &self.product {
            Product::Table(t) => t.get(&(i, j)).cloned().unwrap_or_default(),
            Product::Tensor(a, b) => {
                let (i1, j1) = self.split(a, b, i);
                let (i2, j2) = self.split(a, b, j);
                let negative = (a.degree_of(i2) * b.degree_of(j1)) % 2 == 1;
                let left = a.mul_basis(i1, i2);
                if left.is_zero() {
                    return Vector::zero();
                }
                let right = b.mul_basis(j1, j2);
                let mut entries = Vec::with_capacity(left.len() * right.len());
                for (p, cp) in left.iter() {
                    for (q, cq) in right.iter() {
                        let c = cp.mul(cq);
                        entries.push((self.pair_index(a, b, *p, *q), if negative { c.neg() } else { c }));
                    }
                }
                Vector::from_entries(entries)
            }
        }
    }

    pub fn mul(&self, x: &Vector<F>, y: &Vector<F>) -> Vector<F> {
        let mut acc: HashMap<usize, F> = HashMap::new();
        for (i, ci) in x.iter() {
            for (j, cj) in y.iter() {
                let c = ci.mul(cj);
                for (k, ck) in self.mul_basis(*i, *j).iter() {
                    let slot = acc.entry(*k).or_insert_with(F::zero);
                    *slot = slot.add(&c.mul(ck));
                }
            }
        }
        Vector::from_entries(acc.into_iter().collect())
    }

    pub fn product(&self, factors: &[Vector<F>]) -> Vector<F> {
        factors.iter().fold(self.unit(), |acc, f| self.mul(&acc, f))
    }

    pub fn power(&self, x: &Vector<F>, k: usize) -> Vector<F> {
        (0..k).fold(self.unit(), |acc, _| self.mul(&acc, x))
    }

    pub fn format(&self, v: &Vector<F>) -> String {
        format_terms(v.iter().map(|(i, c)| (self.labels[*i].clone(), c)))
    }

    /// For tensor products: the factor algebras.
    pub fn tensor_factors(&self) -> Option<(&Arc<GradedAlgebra<F>>, &Arc<GradedAlgebra<F>>)> {
        match &self.product {
            Product::Tensor(a, b) => Some((a, b)),
            Product::Table(_) => None,
        }
    }

    fn split(&self, a: &GradedAlgebra<F>, b: &GradedAlgebra<F>, index: usize) -> (usize, usize) {
        let d = self.degree_of(index);
        let mut off = index - self.offsets[d];
        for p in 0..=d {
            let block = a.dim_in_degree(p) * b.dim_in_degree(d - p);
            if off < block {
                let bd = b.dim_in_degree(d - p);
                return (a.offsets[p] + off / bd, b.offsets[d - p] + off % bd);
            }
            off -= block;
        }
        unreachable!("index {index} outside tensor basis")
    }

    fn pair_index(&self, a: &GradedAlgebra<F>, b: &GradedAlgebra<F>, i: usize, j: usize) -> usize {
        let p = a.degree_of(i);
        let q = b.degree_of(j);
        let d = p + q;
        let mut idx = self.offsets[d];
        for p2 in 0..p {
            idx += a.dim_in_degree(p2) * b.dim_in_degree(d - p2);
        }
        idx + (i - a.offsets[p]) * b.dim_in_degree(q) + (j - b.offsets[q])
    }

    /// Index of `i ⊗ j` in a tensor product algebra.
    pub fn tensor_index(&self, i: usize, j: usize) -> Result<usize> {
        let (a, b) = self.tensor_factors().ok_or_else(|| Error::Structural("not a tensor product".into()))?;
        Ok(self.pair_index(a, b, i, j))
    }

    /// Splits a tensor basis index into its factor indices.
    pub fn tensor_split(&self, index: usize) -> Result<(usize, usize)> {
        let (a, b) = self.tensor_factors().ok_or_else(|| Error::Structural("not a tensor product".into()))?;
        Ok(self.split(a, b, index))
    }

    /// `x ⊗ y` for elements of the two factors.
    pub fn tensor_elements(&self, x: &Vector<F>, y: &Vector<F>) -> Result<Vector<F>> {
        let (a, b) = self.tensor_factors().ok_or_else(|| Error::Structural("not a tensor product".into()))?;
        let mut entries = Vec::new();
        for (i, ci) in x.iter() {
            for (j, cj) in y.iter() {
                entries.push((self.pair_index(a, b, *i, *j), ci.mul(cj)));
            }
        }
        Ok(Vector::from_entries(entries))
    }

    /// Koszul swap `u ⊗ v ↦ (-1)^{|u||v|} v ⊗ u` on a tensor square.
    pub fn swap_factors(&self, v: &Vector<F>) -> Result<Vector<F>> {
        let (a, b) = self.tensor_factors().ok_or_else(|| Error::Structural("not a tensor product".into()))?;
        if !Arc::ptr_eq(a, b) {
            return Err(Error::Structural("swap needs a tensor square".into()));
        }
        let mut entries = Vec::new();
        for (k, c) in v.iter() {
            let (i, j) = self.split(a, b, *k);
            let neg = (a.degree_of(i) * a.degree_of(j)) % 2 == 1;
            entries.push((self.pair_index(a, b, j, i), if neg { c.neg() } else { c.clone() }));
        }
        Ok(Vector::from_entries(entries))
    }

    /// Multiplication map `A ⊗ A → A` applied to an element of the tensor square.
    pub fn multiplication_map(&self, v: &Vector<F>) -> Result<Vector<F>> {
        let (a, b) = self.tensor_factors().ok_or_else(|| Error::Structural("not a tensor product".into()))?;
        if !Arc::ptr_eq(a, b) {
            return Err(Error::Structural("multiplication map needs a tensor square".into()));
        }
        let mut out = Vector::zero();
        for (k, c) in v.iter() {
            let (i, j) = self.split(a, b, *k);
            out = out.add_scaled(&a.mul_basis(i, j), c);
        }
        Ok(out)
    }

    /// The zero-divisor `u ⊗ 1 - 1 ⊗ u`.
    pub fn bar(&self, u: &Vector<F>) -> Result<Vector<F>> {
        let (a, _) = self.tensor_factors().ok_or_else(|| Error::Structural("not a tensor product".into()))?;
        let left = self.tensor_elements(u, &a.unit())?;
        let right = self.tensor_elements(&a.unit(), u)?;
        Ok(left.sub(&right))
    }
}

fn offsets_from_dims(dims: &[usize]) -> Vec<usize> {
    let mut offsets = Vec::with_capacity(dims.len() + 1);
    let mut acc = 0;
    offsets.push(0);
    for d in dims {
        acc += d;
        offsets.push(acc);
    }
    offsets
}

/// `A ⊗ B` with `(u₁⊗v₁)(u₂⊗v₂) = (-1)^{|v₁||u₂|} u₁u₂ ⊗ v₁v₂`.
pub fn tensor_product<F: Field>(a: &Arc<GradedAlgebra<F>>, b: &Arc<GradedAlgebra<F>>) -> GradedAlgebra<F> {
    let top = a.top_degree() + b.top_degree();
    let dims: Vec<usize> = (0..=top)
        .map(|d| (0..=d).map(|p| a.dim_in_degree(p) * b.dim_in_degree(d - p)).sum())
        .collect();
    let offsets = offsets_from_dims(&dims);
    let mut labels = Vec::with_capacity(*offsets.last().unwrap());
    for d in 0..=top {
        for p in 0..=d {
            for i in a.degree_range(p) {
                for j in b.degree_range(d - p) {
                    labels.push(format!("{}⊗{}", a.labels[i], b.labels[j]));
                }
            }
        }
    }
    let mut alg = GradedAlgebra {
        name: format!("{}⊗{}", a.name, b.name),
        offsets,
        labels,
        generators: Vec::new(),
        product: Product::Tensor(a.clone(), b.clone()),
    };
    let mut gens = Vec::new();
    for g in a.generators() {
        gens.push(alg.tensor_elements(g, &b.unit()).expect("tensor"));
    }
    for g in b.generators() {
        gens.push(alg.tensor_elements(&a.unit(), g).expect("tensor"));
    }
    alg.generators = gens;
    alg
}

pub fn tensor_square<F: Field>(a: &Arc<GradedAlgebra<F>>) -> GradedAlgebra<F> {
    tensor_product(a, a)
}

/// The subalgebra generated by homogeneous elements, with its own basis and
/// the inclusion into `a`.
pub struct Subalgebra<F> {
    pub algebra: GradedAlgebra<F>,
    /// Image in `a` of each basis vector of the subalgebra.
    pub inclusion: Vec<Vector<F>>,
}

pub fn subalgebra<F: Field>(a: &GradedAlgebra<F>, gens: &[Vector<F>], name: &str) -> Result<Subalgebra<F>> {
    let mut gen_degrees = Vec::new();
    for g in gens {
        match a.degree(g)? {
            Some(0) | None => return Err(Error::Structural("subalgebra generators must be nonzero of positive degree".into())),
            Some(d) => gen_degrees.push(d),
        }
    }
    let top = a.top_degree();
    let mut spans: Vec<Subspace<usize, F>> = vec![Subspace::span([a.unit()])];
    for d in 1..=top {
        let mut vs = Vec::new();
        for (g, &e) in gens.iter().zip(&gen_degrees) {
            if e <= d {
                for row in spans[d - e].rows() {
                    vs.push(a.mul(g, row));
                }
            }
        }
        spans.push(Subspace::span(vs));
    }
    let dims: Vec<usize> = spans.iter().map(|s| s.rank()).collect();
    let offsets = offsets_from_dims(&dims);
    let inclusion: Vec<Vector<F>> = spans.iter().flat_map(|s| s.rows().iter().cloned()).collect();
    let labels = inclusion.iter().map(|v| format!("[{}]", a.format(v))).collect();
    let coords = |d: usize, v: &Vector<F>| -> Result<Vector<F>> {
        if d > top {
            return if v.is_zero() { Ok(Vector::zero()) } else { Err(Error::ModelInconsistency("product escaped the algebra".into())) };
        }
        let c = spans[d]
            .coordinates(v)
            .ok_or_else(|| Error::ModelInconsistency("subalgebra not closed under multiplication".into()))?;
        Ok(Vector::from_entries(c.into_iter().map(|(r, x)| (offsets[d] + r, x)).collect()))
    };
    let mut table = HashMap::new();
    for i in 1..inclusion.len() {
        let di = offsets.partition_point(|&o| o <= i) - 1;
        for j in 1..inclusion.len() {
            let dj = offsets.partition_point(|&o| o <= j) - 1;
            if di + dj > top {
                continue;
            }
            let p = a.mul(&inclusion[i], &inclusion[j]);
            if !p.is_zero() {
                table.insert((i, j), coords(di + dj, &p)?);
            }
        }
    }
    let mut sub_gens = Vec::new();
    for (g, &e) in gens.iter().zip(&gen_degrees) {
        sub_gens.push(coords(e, g)?);
    }
    let algebra = GradedAlgebra::from_table(name, &dims, labels, sub_gens, table)?;
    Ok(Subalgebra { algebra, inclusion })
}

/// Poincaré duality data: a top class and, for each basis element βᵢ, the
/// dual βᵢ* with βᵢ ∪ βⱼ* = δᵢⱼ ω.
#[derive(Clone, Debug)]
pub struct DualityData<F> {
    pub formal_dimension: usize,
    pub omega: Vector<F>,
    /// `duals[i]` is the dual of basis element `i`.
    pub duals: Vec<Vector<F>>,
}

pub fn duality_data<F: Field>(a: &GradedAlgebra<F>, m: usize, omega: &Vector<F>) -> Result<DualityData<F>> {
    if a.dim_in_degree(m) != 1 {
        return Err(Error::NotPoincareDuality(format!("degree {m} has dimension {}", a.dim_in_degree(m))));
    }
    if (m + 1..=a.top_degree()).any(|d| a.dim_in_degree(d) != 0) {
        return Err(Error::NotPoincareDuality(format!("nonzero classes above degree {m}")));
    }
    let top = a.degree_range(m).start;
    let scale = omega.get(&top);
    if scale.is_zero() || omega.len() != 1 {
        return Err(Error::NotPoincareDuality("omega does not span the top degree".into()));
    }
    let scale_inv = scale.inv().unwrap();
    let mut duals = vec![Vector::zero(); a.dim()];
    for k in 0..=m {
        let rows: Vec<usize> = a.degree_range(k).collect();
        let cols: Vec<usize> = a.degree_range(m - k).collect();
        if rows.len() != cols.len() {
            return Err(Error::NotPoincareDuality(format!(
                "dim A^{k} = {} but dim A^{} = {}",
                rows.len(),
                m - k,
                cols.len()
            )));
        }
        if rows.is_empty() {
            continue;
        }
        let pairing: Vec<Vec<F>> = rows
            .iter()
            .map(|&i| cols.iter().map(|&j| a.mul_basis(i, j).get(&top).mul(&scale_inv)).collect())
            .collect();
        let inv = invert(&pairing)
            .ok_or_else(|| Error::NotPoincareDuality(format!("pairing A^{k} x A^{} is degenerate", m - k)))?;
        // P X^T = I, so the coefficients of βᵢ* form the i-th column of P^{-1}.
        for (r, &i) in rows.iter().enumerate() {
            duals[i] = Vector::from_entries(cols.iter().enumerate().map(|(c, &j)| (j, inv[c][r].clone())).collect());
        }
    }
    Ok(DualityData { formal_dimension: m, omega: omega.clone(), duals })
}

/// The diagonal class Σ (-1)^{|βᵢ|} βᵢ ⊗ βᵢ* in the tensor square `aa`.
///
/// Checks that `(x⊗1 - 1⊗x)·Δ = 0` for every degree-one generator `x`.
pub fn diagonal_class<F: Field>(aa: &GradedAlgebra<F>, data: &DualityData<F>) -> Result<Vector<F>> {
    let (a, _) = aa.tensor_factors().ok_or_else(|| Error::Structural("diagonal class lives in a tensor square".into()))?;
    let mut delta = Vector::zero();
    for i in 0..a.dim() {
        let sign = F::sign(a.degree_of(i) % 2 == 1);
        let term = aa.tensor_elements(&Vector::unit(i), &data.duals[i])?;
        delta = delta.add_scaled(&term, &sign);
    }
    for g in a.generators() {
        if a.degree(g)? == Some(1) {
            let z = aa.bar(g)?;
            if !aa.mul(&z, &delta).is_zero() {
                return Err(Error::ModelInconsistency(format!(
                    "({} ⊗ 1 - 1 ⊗ {0})·Δ ≠ 0",
                    a.format(g)
                )));
            }
        }
    }
    Ok(delta)
}
