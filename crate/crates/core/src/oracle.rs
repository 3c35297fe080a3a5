//! Independent verification of the generator formulas through the
//! exponential construction: expand the lower-left minors of exp(t·x) for a
//! symbolic lower-triangular x, locate the first nonvanishing t-order, and
//! compare the leading coefficient with the claimed generator (or its
//! square, or the product of the last two generators at the half-spin index
//! of even type D).
//!
//! The minor route replaces the fundamental representations: the highest and
//! lowest exterior-power weight vectors pin an extreme matrix coefficient
//! whose leading term is the weight-(1−w₀)λ invariant.

use crate::error::{Error, Result};
use crate::generators::xi_symbol;
use crate::rootsys::{LieType, RootSystem, SparseMatrix};
use crate::scalar::Scalar;
use crate::uea::{Nilradical, SymPoly};
use serde::Serialize;
use std::collections::BTreeMap;

/// Variable 0 is the expansion parameter t; variable 1+k is the coefficient
/// attached to the k-th positive root.
const VAR_T: u32 = 0;

/// Sorted sparse exponent vector.
type Mono = Vec<(u32, u32)>;

/// A sparse multivariate polynomial over the scalar field.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Mono, Scalar>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn constant(c: Scalar) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(Vec::new(), c);
        p
    }

    pub fn one() -> Self {
        MultiPoly::constant(Scalar::one())
    }

    pub fn var(v: u32) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(vec![(v, 1)], Scalar::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, mono: Mono, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &MultiPoly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &Scalar) -> MultiPoly {
        let mut out = MultiPoly::zero();
        if c.is_zero() {
            return out;
        }
        for (m, v) in &self.terms {
            out.terms.insert(m.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(merge_monos(ma, mb), ca * cb);
            }
        }
        out
    }

    /// Lowest exponent of `v` across all terms.
    pub fn min_exponent(&self, v: u32) -> Option<u32> {
        self.terms.keys().map(|m| exponent_of(m, v)).min()
    }

    /// Terms whose `v`-exponent equals `e`, with `v` removed.
    pub fn coefficient_at(&self, v: u32, e: u32) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            if exponent_of(m, v) == e {
                let reduced: Mono = m.iter().filter(|(w, _)| *w != v).cloned().collect();
                out.add_term(reduced, c.clone());
            }
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Scalar)> {
        self.terms.iter()
    }
}

fn exponent_of(m: &Mono, v: u32) -> u32 {
    m.iter()
        .find(|(w, _)| *w == v)
        .map(|(_, e)| *e)
        .unwrap_or(0)
}

fn merge_monos(a: &Mono, b: &Mono) -> Mono {
    let mut out: Mono = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push((a[i].0, a[i].1 + b[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// A square matrix of polynomials over the index set of the realization.
#[derive(Clone, Debug)]
pub struct PolyMatrix {
    pub indices: Vec<i32>,
    data: Vec<Vec<MultiPoly>>,
}

impl PolyMatrix {
    pub fn zero(indices: Vec<i32>) -> Self {
        let n = indices.len();
        PolyMatrix {
            indices,
            data: vec![vec![MultiPoly::zero(); n]; n],
        }
    }

    pub fn identity(indices: Vec<i32>) -> Self {
        let mut m = PolyMatrix::zero(indices);
        for k in 0..m.data.len() {
            m.data[k][k] = MultiPoly::one();
        }
        m
    }

    fn pos(&self, idx: i32) -> usize {
        self.indices
            .iter()
            .position(|&x| x == idx)
            .expect("index in range")
    }

    pub fn get(&self, r: i32, c: i32) -> &MultiPoly {
        &self.data[self.pos(r)][self.pos(c)]
    }

    pub fn add_entry(&mut self, r: i32, c: i32, p: &MultiPoly) {
        let (rp, cp) = (self.pos(r), self.pos(c));
        self.data[rp][cp].add_assign(p);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().flatten().all(MultiPoly::is_zero)
    }

    pub fn mat_mul(&self, other: &PolyMatrix) -> PolyMatrix {
        let n = self.data.len();
        let mut out = PolyMatrix::zero(self.indices.clone());
        for i in 0..n {
            for k in 0..n {
                if self.data[i][k].is_zero() {
                    continue;
                }
                for j in 0..n {
                    if other.data[k][j].is_zero() {
                        continue;
                    }
                    let prod = self.data[i][k].mul(&other.data[k][j]);
                    out.data[i][j].add_assign(&prod);
                }
            }
        }
        out
    }

    pub fn add_scaled(&mut self, other: &PolyMatrix, c: &Scalar) {
        for (row, orow) in self.data.iter_mut().zip(&other.data) {
            for (e, oe) in row.iter_mut().zip(orow) {
                e.add_assign(&oe.scale(c));
            }
        }
    }

    /// Determinant of the submatrix on row/column positions, by Laplace
    /// recursion over column subsets.
    pub fn minor_det(&self, rows: &[usize], cols: &[usize]) -> MultiPoly {
        assert_eq!(rows.len(), cols.len());
        let mut memo: BTreeMap<u64, MultiPoly> = BTreeMap::new();
        self.det_rec(rows, cols, (1u64 << cols.len()) - 1, &mut memo)
    }

    fn det_rec(
        &self,
        rows: &[usize],
        cols: &[usize],
        mask: u64,
        memo: &mut BTreeMap<u64, MultiPoly>,
    ) -> MultiPoly {
        if mask == 0 {
            return MultiPoly::one();
        }
        if let Some(p) = memo.get(&mask) {
            return p.clone();
        }
        let row = rows[rows.len() - mask.count_ones() as usize];
        let mut acc = MultiPoly::zero();
        let mut sign = Scalar::one();
        for (j, &col) in cols.iter().enumerate() {
            if mask & (1 << j) == 0 {
                continue;
            }
            let e = &self.data[row][col];
            if !e.is_zero() {
                let sub = self.det_rec(rows, cols, mask & !(1 << j), memo);
                acc.add_assign(&e.mul(&sub).scale(&sign));
            }
            sign = -&sign;
        }
        memo.insert(mask, acc.clone());
        acc
    }
}

/// Exact exponential Σ (tx)^k / k! of a nilpotent scalar matrix, as a
/// polynomial matrix in t.
pub fn exp_nilpotent(x: &SparseMatrix) -> Result<PolyMatrix> {
    let indices = x.sys.matrix_indices();
    let mut lifted = PolyMatrix::zero(indices);
    let t = MultiPoly::var(VAR_T);
    for (&(r, c), v) in x.entries() {
        lifted.add_entry(r, c, &t.scale(v));
    }
    exp_poly(&lifted)
}

fn exp_poly(x: &PolyMatrix) -> Result<PolyMatrix> {
    let n = x.indices.len();
    let mut out = PolyMatrix::identity(x.indices.clone());
    let mut power = x.clone();
    let mut factorial = 1i64;
    for k in 1..=n as i64 + 1 {
        factorial *= k;
        out.add_scaled(&power, &Scalar::from_ratio(1, factorial));
        power = power.mat_mul(x);
        if power.is_zero() {
            return Ok(out);
        }
    }
    Err(Error::NotNilpotent)
}

/// Result of a minor expansion: the first nonvanishing t-order and the
/// corresponding coefficient converted into S(n) through the dual scales.
#[derive(Clone, Debug)]
pub struct MinorExpansion {
    pub vanishing_order: u32,
    pub lead: SymPoly,
}

/// Expand the lower-left i×i minor of exp(t·x) for the fully symbolic
/// x = Σ x_α e_αᵀ in the negative nilradical.
pub fn lower_minor_expansion(alg: &Nilradical, i: u32) -> Result<MinorExpansion> {
    let sys = alg.sys();
    let indices = sys.matrix_indices();
    let size = indices.len();
    if i == 0 || i as usize > size {
        return Err(Error::IndexOutOfRange {
            what: "minor",
            index: i,
            max: size as u32,
        });
    }
    let mut x = PolyMatrix::zero(indices);
    let t = MultiPoly::var(VAR_T);
    for (k, root) in alg.roots().iter().enumerate() {
        let transposed = sys.root_vector(*root)?.transpose();
        let var = t.mul(&MultiPoly::var(1 + k as u32));
        for (&(r, c), v) in transposed.entries() {
            x.add_entry(r, c, &var.scale(v));
        }
    }
    let e = exp_poly(&x)?;
    let rows: Vec<usize> = (size - i as usize..size).collect();
    let cols: Vec<usize> = (0..i as usize).collect();
    let det = e.minor_det(&rows, &cols);
    let Some(order) = det.min_exponent(VAR_T) else {
        return Err(Error::ZeroMinor);
    };
    let lead_raw = det.coefficient_at(VAR_T, order);
    // Convert each x_α to the dual-scale multiple of e_α.
    let mut lead = alg.sym_zero();
    for (mono, c) in lead_raw.terms() {
        let mut word = Vec::new();
        let mut coeff = c.clone();
        for &(v, e) in mono {
            let root = alg.roots()[(v - 1) as usize];
            let scale = sys.dual_scale(root)?;
            coeff *= &scale.pow(e);
            for _ in 0..e {
                word.push(v - 1);
            }
        }
        lead.add_assign(&alg.sym_from_terms([(word, coeff)]));
    }
    Ok(MinorExpansion {
        vanishing_order: order,
        lead,
    })
}

/// What the leading minor coefficient should be proportional to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "shape", rename_all = "lowercase")]
pub enum OracleShape {
    /// ξ_i itself.
    Single { i: u32 },
    /// ξ_i squared (even indices and the spin-weight top indices).
    Square { i: u32 },
    /// ξ_i·ξ_j (the half-spin index pair of even type D).
    Product { i: u32, j: u32 },
}

/// Expected comparison shape and vanishing order for each generator index.
pub fn expected_shape(sys: RootSystem, i: u32) -> Result<(OracleShape, u32)> {
    let n = sys.rank;
    let m = sys.cascade_size();
    if i == 0 || i > m {
        return Err(Error::IndexOutOfRange {
            what: "generator",
            index: i,
            max: m,
        });
    }
    Ok(match sys.kind {
        LieType::A | LieType::C => (OracleShape::Single { i }, i),
        LieType::B => {
            if i % 2 == 0 {
                (OracleShape::Square { i }, i)
            } else if i < n {
                (OracleShape::Single { i }, i + 1)
            } else {
                (OracleShape::Square { i: n }, n + 1)
            }
        }
        LieType::D => {
            if i <= n - 2 {
                if i % 2 == 0 {
                    (OracleShape::Square { i }, i)
                } else {
                    (OracleShape::Single { i }, i + 1)
                }
            } else if n % 2 == 0 {
                if i == n - 1 {
                    (OracleShape::Product { i: n - 1, j: n }, n)
                } else {
                    (OracleShape::Square { i: n }, n)
                }
            } else {
                // n odd: the top cascade index is n − 1.
                (OracleShape::Square { i: n - 1 }, n - 1)
            }
        }
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub index: u32,
    pub shape: OracleShape,
    pub expected_order: u32,
    pub observed_order: u32,
    pub matched: bool,
    /// lead = scalar · reference, when matched.
    pub scalar: Option<Scalar>,
    pub lead_terms: usize,
}

impl OracleReport {
    pub fn pass(&self) -> bool {
        self.matched && self.expected_order == self.observed_order
    }
}

/// Compare the minor expansion against the generator formulas at index i.
pub fn oracle_compare(alg: &Nilradical, i: u32) -> Result<OracleReport> {
    let sys = alg.sys();
    let (shape, expected_order) = expected_shape(sys, i)?;
    let expansion = lower_minor_expansion(alg, i)?;
    let reference = match shape {
        OracleShape::Single { i } => xi_symbol(alg, i)?,
        OracleShape::Square { i } => {
            let s = xi_symbol(alg, i)?;
            s.mul(&s)
        }
        OracleShape::Product { i, j } => xi_symbol(alg, i)?.mul(&xi_symbol(alg, j)?),
    };
    let (matched, scalar) = proportionality(&expansion.lead, &reference);
    Ok(OracleReport {
        index: i,
        shape,
        expected_order,
        observed_order: expansion.vanishing_order,
        matched,
        scalar,
        lead_terms: expansion.lead.num_terms(),
    })
}

/// lead = c · reference for a single nonzero scalar c?
fn proportionality(lead: &SymPoly, reference: &SymPoly) -> (bool, Option<Scalar>) {
    let Some((first_mono, first_coeff)) = reference.terms().next() else {
        return (lead.is_zero(), None);
    };
    let c = &lead.coeff(first_mono) / first_coeff;
    if c.is_zero() {
        return (false, None);
    }
    if *lead == reference.scale(&c) {
        (true, Some(c))
    } else {
        (false, None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Root;

    fn nil(kind: LieType, rank: u32) -> Nilradical {
        Nilradical::new(RootSystem::new(kind, rank).unwrap()).unwrap()
    }

    #[test]
    fn exp_examples() {
        let sys = RootSystem::new(LieType::A, 2).unwrap();
        let zero = SparseMatrix::zero(sys);
        let e = exp_nilpotent(&zero).unwrap();
        assert_eq!(*e.get(1, 1), MultiPoly::one());
        assert_eq!(*e.get(1, 2), MultiPoly::zero());

        // x = e_{1,2}: x² = 0, so exp is I + t·x.
        let m = sys.root_vector(Root::diff(1, 2)).unwrap();
        let e = exp_nilpotent(&m).unwrap();
        assert_eq!(*e.get(1, 2), MultiPoly::var(VAR_T));

        // x = e_{1,2} + e_{2,3}: three-step nilpotent with the t²/2 corner.
        let sys3 = RootSystem::new(LieType::A, 3).unwrap();
        let m = sys3
            .root_vector(Root::diff(1, 2))
            .unwrap()
            .add(&sys3.root_vector(Root::diff(2, 3)).unwrap());
        let e = exp_nilpotent(&m).unwrap();
        let t = MultiPoly::var(VAR_T);
        assert_eq!(*e.get(1, 3), t.mul(&t).scale(&Scalar::from_ratio(1, 2)));

        // Non-nilpotent input is rejected.
        let mut bad = SparseMatrix::zero(sys);
        bad.set(1, 1, Scalar::one());
        assert!(matches!(exp_nilpotent(&bad), Err(Error::NotNilpotent)));
    }

    #[test]
    fn minor_expansion_a3() {
        let a3 = nil(LieType::A, 4);
        // i = 1: order 1, lead = x_{e1-e4} ↦ e_{e1-e4}.
        let exp = lower_minor_expansion(&a3, 1).unwrap();
        assert_eq!(exp.vanishing_order, 1);
        assert_eq!(exp.lead, a3.symbol(Root::diff(1, 4)).unwrap());
    }

    #[test]
    fn oracle_a_small() {
        for n in [3u32, 4, 5] {
            let alg = nil(LieType::A, n);
            for i in 1..=alg.sys().cascade_size() {
                let rep = oracle_compare(&alg, i).unwrap();
                assert!(rep.pass(), "A rank {n} index {i}: {rep:?}");
                // The dual scales make the type-A comparison scalar 1.
                assert_eq!(rep.scalar, Some(Scalar::one()), "A rank {n} index {i}");
            }
        }
    }

    #[test]
    fn oracle_c2_matches() {
        let c2 = nil(LieType::C, 2);
        for i in 1..=2 {
            let rep = oracle_compare(&c2, i).unwrap();
            assert!(rep.pass(), "C2 index {i}: {rep:?}");
        }
    }

    #[test]
    fn oracle_d3_vanishing_order() {
        // Odd low index of type D: the minor vanishes to order i+1.
        let d3 = nil(LieType::D, 3);
        let rep = oracle_compare(&d3, 1).unwrap();
        assert_eq!(rep.observed_order, 2);
        assert!(rep.pass(), "{rep:?}");
    }

    #[test]
    fn oracle_b1_spin_square() {
        let b1 = nil(LieType::B, 1);
        let rep = oracle_compare(&b1, 1).unwrap();
        assert_eq!(rep.shape, OracleShape::Square { i: 1 });
        assert_eq!(rep.observed_order, 2);
        assert!(rep.pass(), "{rep:?}");
    }

    #[test]
    fn oracle_d2_product_shape() {
        let d2 = nil(LieType::D, 2);
        let rep = oracle_compare(&d2, 1).unwrap();
        assert_eq!(rep.shape, OracleShape::Product { i: 1, j: 2 });
        assert!(rep.pass(), "{rep:?}");
    }
}
