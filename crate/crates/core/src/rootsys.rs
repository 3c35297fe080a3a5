//! Classical root systems A/B/C/D at finite rank, their positive roots, and
//! the matrix realization of root vectors inside sl/so/sp.
//!
//! Conventions: type A with rank parameter `n` is the system A_{n-1} living in
//! sl_n; types B, C, D with rank `n` live in so_{2n+1}, sp_{2n}, so_{2n}. Rows
//! and columns of B/C/D matrices are indexed by 1..n, (0 for B), -n..-1, in
//! that display order. Structure constants are always derived from the matrix
//! realization, never hand-coded.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use num::{BigInt, BigRational, One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LieType {
    A,
    B,
    C,
    D,
}

impl LieType {
    pub fn parse(s: &str) -> Option<LieType> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Some(LieType::A),
            "B" => Some(LieType::B),
            "C" => Some(LieType::C),
            "D" => Some(LieType::D),
            _ => None,
        }
    }
}

/// A finite classical root system. `rank` counts the ε-coordinates, so
/// `(A, n)` denotes A_{n-1} (the root system of sl_n).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootSystem {
    pub kind: LieType,
    pub rank: u32,
}

/// A positive root in ε-coordinates with ordered indices (`i < j` for the
/// two-index kinds).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Root {
    /// ε_i − ε_j
    Diff { i: u32, j: u32 },
    /// ε_i + ε_j
    Sum { i: u32, j: u32 },
    /// ε_i (type B)
    Short { i: u32 },
    /// 2ε_i (type C)
    Long { i: u32 },
}

impl Root {
    pub fn diff(i: u32, j: u32) -> Root {
        assert!(0 < i && i < j);
        Root::Diff { i, j }
    }

    pub fn sum(i: u32, j: u32) -> Root {
        assert!(0 < i && i < j);
        Root::Sum { i, j }
    }

    pub fn short(i: u32) -> Root {
        assert!(i > 0);
        Root::Short { i }
    }

    pub fn long(i: u32) -> Root {
        assert!(i > 0);
        Root::Long { i }
    }

    /// Row of the root in the matrix picture.
    pub fn row(&self) -> u32 {
        match *self {
            Root::Diff { i, .. } | Root::Sum { i, .. } | Root::Short { i } | Root::Long { i } => i,
        }
    }

    /// Column of the root in the matrix picture: `j` for ε_i−ε_j, `−j` for
    /// ε_i+ε_j, `−i` for 2ε_i and `0` for ε_i.
    pub fn col(&self) -> i32 {
        match *self {
            Root::Diff { j, .. } => j as i32,
            Root::Sum { j, .. } => -(j as i32),
            Root::Short { .. } => 0,
            Root::Long { i } => -(i as i32),
        }
    }

    /// Weight as a vector in ℤⁿ.
    pub fn weight(&self, rank: u32) -> Vec<i64> {
        let mut w = vec![0i64; rank as usize];
        match *self {
            Root::Diff { i, j } => {
                w[i as usize - 1] += 1;
                w[j as usize - 1] -= 1;
            }
            Root::Sum { i, j } => {
                w[i as usize - 1] += 1;
                w[j as usize - 1] += 1;
            }
            Root::Short { i } => w[i as usize - 1] += 1,
            Root::Long { i } => w[i as usize - 1] += 2,
        }
        w
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Root::Diff { i, j } => write!(f, "e{i}-e{j}"),
            Root::Sum { i, j } => write!(f, "e{i}+e{j}"),
            Root::Short { i } => write!(f, "e{i}"),
            Root::Long { i } => write!(f, "2e{i}"),
        }
    }
}

impl RootSystem {
    pub fn new(kind: LieType, rank: u32) -> Result<RootSystem> {
        let min = match kind {
            LieType::A | LieType::D => 2,
            LieType::B | LieType::C => 1,
        };
        if rank < min {
            return Err(Error::RankTooSmall { kind, rank });
        }
        Ok(RootSystem { kind, rank })
    }

    /// Number of canonical generators, i.e. the size of the finite cascade.
    pub fn cascade_size(&self) -> u32 {
        let n = self.rank;
        match self.kind {
            LieType::A => n / 2,
            LieType::B | LieType::C => n,
            LieType::D => {
                if n % 2 == 0 {
                    n
                } else {
                    n - 1
                }
            }
        }
    }

    pub fn contains(&self, r: Root) -> bool {
        let n = self.rank;
        match r {
            Root::Diff { i, j } => 0 < i && i < j && j <= n,
            Root::Sum { i, j } => self.kind != LieType::A && 0 < i && i < j && j <= n,
            Root::Short { i } => self.kind == LieType::B && 0 < i && i <= n,
            Root::Long { i } => self.kind == LieType::C && 0 < i && i <= n,
        }
    }

    fn check(&self, r: Root) -> Result<()> {
        if self.contains(r) {
            Ok(())
        } else {
            Err(Error::RootNotInSystem {
                kind: self.kind,
                rank: self.rank,
                root: r,
            })
        }
    }

    /// Display position of a matrix column index; used to order roots
    /// row-major the way their leading entries appear in the realization.
    pub fn col_position(&self, col: i32) -> u32 {
        let n = self.rank;
        if col > 0 {
            col as u32
        } else if col == 0 {
            n + 1
        } else {
            match self.kind {
                LieType::B => (2 * n as i32 + 2 + col) as u32,
                _ => (2 * n as i32 + 1 + col) as u32,
            }
        }
    }

    /// All positive roots, row-major by (row, column position). This is also
    /// the global order used for PBW normal forms.
    pub fn positive_roots(&self) -> Vec<Root> {
        let n = self.rank;
        let mut out = Vec::new();
        for i in 1..=n {
            let mut row: Vec<Root> = Vec::new();
            for j in i + 1..=n {
                row.push(Root::diff(i, j));
            }
            match self.kind {
                LieType::A => {}
                LieType::B => {
                    row.push(Root::short(i));
                    for j in (i + 1..=n).rev() {
                        row.push(Root::sum(i, j));
                    }
                }
                LieType::C => {
                    for j in (i + 1..=n).rev() {
                        row.push(Root::sum(i, j));
                    }
                    row.push(Root::long(i));
                }
                LieType::D => {
                    for j in (i + 1..=n).rev() {
                        row.push(Root::sum(i, j));
                    }
                }
            }
            out.extend(row);
        }
        out
    }

    /// Sum of two positive roots when it is again a positive root.
    pub fn add_roots(&self, a: Root, b: Root) -> Option<Root> {
        let mut w = a.weight(self.rank);
        for (x, y) in w.iter_mut().zip(b.weight(self.rank)) {
            *x += y;
        }
        self.root_from_weight(&w)
    }

    pub fn root_from_weight(&self, w: &[i64]) -> Option<Root> {
        let nz: Vec<(usize, i64)> = w
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(i, c)| (i, *c))
            .collect();
        let r = match nz.as_slice() {
            [(i, 1), (j, -1)] => Root::diff(*i as u32 + 1, *j as u32 + 1),
            [(i, -1), (j, 1)] => Root::diff(*j as u32 + 1, *i as u32 + 1),
            [(i, 1), (j, 1)] => Root::sum(*i as u32 + 1, *j as u32 + 1),
            [(i, 1)] => Root::short(*i as u32 + 1),
            [(i, 2)] => Root::long(*i as u32 + 1),
            _ => return None,
        };
        self.contains(r).then_some(r)
    }

    /// Matrix of the root vector e_α in the defining realization.
    pub fn root_vector(&self, r: Root) -> Result<SparseMatrix> {
        self.check(r)?;
        let mut m = SparseMatrix::zero(*self);
        let one = Scalar::one();
        match (self.kind, r) {
            (LieType::A, Root::Diff { i, j }) => {
                m.set(i as i32, j as i32, one);
            }
            (_, Root::Diff { i, j }) => {
                m.set(i as i32, j as i32, one.clone());
                m.set(-(j as i32), -(i as i32), -&one);
            }
            (LieType::C, Root::Sum { i, j }) => {
                m.set(i as i32, -(j as i32), one.clone());
                m.set(j as i32, -(i as i32), one);
            }
            (_, Root::Sum { i, j }) => {
                m.set(i as i32, -(j as i32), one.clone());
                m.set(j as i32, -(i as i32), -&one);
            }
            (_, Root::Long { i }) => {
                m.set(i as i32, -(i as i32), one);
            }
            (_, Root::Short { i }) => {
                // Upper-triangular short root vector of weight ε_i; the
                // entries sit at (i, 0) and (0, −i) in this basis order.
                let s = Scalar::sqrt2();
                m.set(i as i32, 0, s.clone());
                m.set(0, -(i as i32), -&s);
            }
        }
        Ok(m)
    }

    /// Leading entry of e_α: the matrix position and coefficient used to read
    /// off the e_α-component of an arbitrary matrix in the span of the
    /// positive root vectors.
    fn leading_entry(&self, r: Root) -> ((i32, i32), Scalar) {
        match (self.kind, r) {
            (_, Root::Diff { i, j }) => ((i as i32, j as i32), Scalar::one()),
            (_, Root::Sum { i, j }) => ((i as i32, -(j as i32)), Scalar::one()),
            (_, Root::Long { i }) => ((i as i32, -(i as i32)), Scalar::one()),
            (_, Root::Short { i }) => ((i as i32, 0), Scalar::sqrt2()),
        }
    }

    /// [e_α, e_β] expanded in the root-vector basis. The expansion must leave
    /// a zero residual; anything else signals a realization bug.
    pub fn bracket_in_basis(&self, a: Root, b: Root) -> Result<BTreeMap<Root, Scalar>> {
        self.check(a)?;
        self.check(b)?;
        let ma = self.root_vector(a)?;
        let mb = self.root_vector(b)?;
        let mut comm = ma.commutator(&mb);
        let mut out = BTreeMap::new();
        for r in self.positive_roots() {
            let ((row, col), lead) = self.leading_entry(r);
            if let Some(c) = comm.get(row, col) {
                let coeff = &c / &lead;
                let vec = self.root_vector(r)?;
                comm = comm.sub(&vec.scale(&coeff));
                if !coeff.is_zero() {
                    out.insert(r, coeff);
                }
            }
        }
        if !comm.is_zero() {
            return Err(Error::ResidualNonZero);
        }
        Ok(out)
    }

    /// Scale c with e_α* = c·e_αᵀ under the trace-form identification.
    pub fn dual_scale(&self, r: Root) -> Result<Scalar> {
        self.check(r)?;
        Ok(match (self.kind, r) {
            (LieType::A, _) | (LieType::C, Root::Long { .. }) => Scalar::one(),
            (LieType::B, Root::Short { .. }) => Scalar::from_ratio(1, 4),
            _ => Scalar::from_ratio(1, 2),
        })
    }

    /// Matrix of the defining invariant bilinear form (types B, C, D).
    pub fn gram_matrix(&self) -> Option<SparseMatrix> {
        let n = self.rank as i32;
        let mut m = SparseMatrix::zero(*self);
        match self.kind {
            LieType::A => return None,
            LieType::B => {
                m.set(0, 0, Scalar::one());
                for i in 1..=n {
                    m.set(i, -i, Scalar::one());
                    m.set(-i, i, Scalar::one());
                }
            }
            LieType::C => {
                for i in 1..=n {
                    m.set(i, -i, Scalar::one());
                    m.set(-i, i, -&Scalar::one());
                }
            }
            LieType::D => {
                for i in 1..=n {
                    m.set(i, -i, Scalar::one());
                    m.set(-i, i, Scalar::one());
                }
            }
        }
        Some(m)
    }

    /// Index set of matrix rows/columns in display order.
    pub fn matrix_indices(&self) -> Vec<i32> {
        let n = self.rank as i32;
        match self.kind {
            LieType::A => (1..=n).collect(),
            LieType::B => (1..=n).chain([0]).chain((1..=n).rev().map(|i| -i)).collect(),
            LieType::C | LieType::D => (1..=n).chain((1..=n).rev().map(|i| -i)).collect(),
        }
    }

    /// i-th fundamental weight in ε-coordinates.
    pub fn fundamental_weight(&self, i: u32) -> Result<Vec<BigRational>> {
        let n = self.rank;
        let max = if self.kind == LieType::A { n - 1 } else { n };
        if i == 0 || i > max {
            return Err(Error::IndexOutOfRange {
                what: "fundamental weight",
                index: i,
                max,
            });
        }
        let mut w = vec![BigRational::zero(); n as usize];
        let one = BigRational::one();
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        match self.kind {
            LieType::A => {
                // ϖ_i = Σ_{k≤i} ε_k − (i/n)·Σ ε_k
                let frac = BigRational::new(BigInt::from(i), BigInt::from(n));
                for k in 0..n as usize {
                    w[k] = if (k as u32) < i {
                        &one - &frac
                    } else {
                        -frac.clone()
                    };
                }
            }
            LieType::B => {
                if i < n {
                    for k in 0..i as usize {
                        w[k] = one.clone();
                    }
                } else {
                    for k in 0..n as usize {
                        w[k] = half.clone();
                    }
                }
            }
            LieType::C => {
                for k in 0..i as usize {
                    w[k] = one.clone();
                }
            }
            LieType::D => {
                if i <= n - 2 {
                    for k in 0..i as usize {
                        w[k] = one.clone();
                    }
                } else {
                    for k in 0..n as usize {
                        w[k] = half.clone();
                    }
                    if i == n - 1 {
                        w[n as usize - 1] = -half;
                    }
                }
            }
        }
        Ok(w)
    }

    /// Image of a weight vector under the longest Weyl group element.
    pub fn w0_image(&self, w: &[BigRational]) -> Vec<BigRational> {
        let n = self.rank as usize;
        match self.kind {
            LieType::A => (0..n).map(|k| w[n - 1 - k].clone()).collect(),
            LieType::B | LieType::C => w.iter().map(|x| -x).collect(),
            LieType::D => {
                if self.rank % 2 == 0 {
                    w.iter().map(|x| -x).collect()
                } else {
                    let mut out: Vec<BigRational> = w.iter().map(|x| -x).collect();
                    out[n - 1] = w[n - 1].clone();
                    out
                }
            }
        }
    }

    /// Exponent k_i attached to the i-th canonical generator.
    pub fn k_exponent(&self, i: u32) -> Result<u32> {
        let m = self.cascade_size();
        if i == 0 || i > m {
            return Err(Error::IndexOutOfRange {
                what: "generator",
                index: i,
                max: m,
            });
        }
        Ok(match self.kind {
            LieType::A | LieType::C => 1,
            LieType::B | LieType::D => {
                if i % 2 == 1 || i == m {
                    1
                } else {
                    2
                }
            }
        })
    }

    /// The weight (1 − w₀)ϖ_i / k_i of the i-th canonical generator, computed
    /// from first principles.
    pub fn generator_weight(&self, i: u32) -> Result<Vec<BigRational>> {
        let k = self.k_exponent(i)?;
        let w = self.fundamental_weight(i)?;
        let w0 = self.w0_image(&w);
        let kk = BigRational::from_integer(BigInt::from(k));
        Ok(w
            .iter()
            .zip(w0.iter())
            .map(|(a, b)| (a - b) / &kk)
            .collect())
    }
}

/// Inner product of a weight with a root, divided by (root, root); the Eq-2
/// style exponent r_μ(β).
pub fn weight_root_ratio(mu: &[BigRational], beta: Root) -> BigRational {
    let w = beta.weight(mu.len() as u32);
    let mut dot = BigRational::zero();
    let mut norm = BigRational::zero();
    for (m, c) in mu.iter().zip(w.iter()) {
        let c = BigRational::from_integer(BigInt::from(*c));
        dot += m * &c;
        norm += &c * &c;
    }
    dot / norm
}

/// A sparse matrix over ℚ(√2) with the signed index convention of the
/// realization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    pub sys: RootSystem,
    entries: BTreeMap<(i32, i32), Scalar>,
}

impl SparseMatrix {
    pub fn zero(sys: RootSystem) -> Self {
        SparseMatrix {
            sys,
            entries: BTreeMap::new(),
        }
    }

    pub fn set(&mut self, row: i32, col: i32, v: Scalar) {
        if v.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), v);
        }
    }

    pub fn add_to(&mut self, row: i32, col: i32, v: &Scalar) {
        let cur = self
            .entries
            .remove(&(row, col))
            .unwrap_or_else(Scalar::zero);
        self.set(row, col, &cur + v);
    }

    pub fn get(&self, row: i32, col: i32) -> Option<Scalar> {
        self.entries.get(&(row, col)).cloned()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(i32, i32), &Scalar)> {
        self.entries.iter()
    }

    pub fn scale(&self, c: &Scalar) -> SparseMatrix {
        let mut out = SparseMatrix::zero(self.sys);
        for (&(r, col), v) in &self.entries {
            out.set(r, col, v * c);
        }
        out
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut out = self.clone();
        for (&(r, c), v) in &other.entries {
            out.add_to(r, c, v);
        }
        out
    }

    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut out = self.clone();
        for (&(r, c), v) in &other.entries {
            out.add_to(r, c, &(-v));
        }
        out
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut by_row: BTreeMap<i32, Vec<(i32, &Scalar)>> = BTreeMap::new();
        for (&(r, c), v) in &other.entries {
            by_row.entry(r).or_default().push((c, v));
        }
        let mut out = SparseMatrix::zero(self.sys);
        for (&(r, mid), v) in &self.entries {
            if let Some(row) = by_row.get(&mid) {
                for (c, w) in row {
                    out.add_to(r, *c, &(v * w));
                }
            }
        }
        out
    }

    pub fn commutator(&self, other: &SparseMatrix) -> SparseMatrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut out = SparseMatrix::zero(self.sys);
        for (&(r, c), v) in &self.entries {
            out.set(c, r, v.clone());
        }
        out
    }

    /// Check β(u, Mv) + β(Mu, v) = 0 for all basis pairs, i.e. F·M + Mᵀ·F = 0
    /// against the Gram matrix F of the defining form.
    pub fn preserves_form(&self) -> bool {
        match self.sys.gram_matrix() {
            None => true,
            Some(f) => f.mul(self).add(&self.transpose().mul(&f)).is_zero(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(kind: LieType, rank: u32) -> RootSystem {
        RootSystem::new(kind, rank).unwrap()
    }

    #[test]
    fn rank_bounds() {
        assert!(RootSystem::new(LieType::A, 1).is_err());
        assert!(RootSystem::new(LieType::D, 1).is_err());
        assert!(RootSystem::new(LieType::C, 1).is_ok());
    }

    #[test]
    fn positive_roots_a1() {
        assert_eq!(
            sys(LieType::A, 2).positive_roots(),
            vec![Root::diff(1, 2)]
        );
    }

    #[test]
    fn positive_roots_c2_order() {
        let roots = sys(LieType::C, 2).positive_roots();
        assert_eq!(
            roots,
            vec![
                Root::diff(1, 2),
                Root::sum(1, 2),
                Root::long(1),
                Root::long(2)
            ]
        );
    }

    #[test]
    fn positive_roots_d3_count() {
        assert_eq!(sys(LieType::D, 3).positive_roots().len(), 6);
    }

    #[test]
    fn root_vector_examples() {
        let a3 = sys(LieType::A, 4);
        let m = a3.root_vector(Root::diff(1, 2)).unwrap();
        assert_eq!(m.get(1, 2), Some(Scalar::one()));
        assert_eq!(m.entries().count(), 1);

        let c2 = sys(LieType::C, 2);
        let m = c2.root_vector(Root::long(1)).unwrap();
        assert_eq!(m.get(1, -1), Some(Scalar::one()));
        assert_eq!(m.entries().count(), 1);

        let b2 = sys(LieType::B, 2);
        let m = b2.root_vector(Root::short(1)).unwrap();
        assert_eq!(m.get(1, 0), Some(Scalar::sqrt2()));
        assert_eq!(m.get(0, -1), Some(-&Scalar::sqrt2()));
    }

    #[test]
    fn brackets_match_examples() {
        let a3 = sys(LieType::A, 4);
        let b = a3
            .bracket_in_basis(Root::diff(1, 2), Root::diff(2, 3))
            .unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b[&Root::diff(1, 3)], Scalar::one());

        let empty = a3
            .bracket_in_basis(Root::diff(1, 2), Root::diff(3, 4))
            .unwrap();
        assert!(empty.is_empty());

        let c2 = sys(LieType::C, 2);
        let b = c2
            .bracket_in_basis(Root::diff(1, 2), Root::long(2))
            .unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b[&Root::sum(1, 2)], Scalar::one());
    }

    #[test]
    fn all_root_vectors_preserve_form() {
        for kind in [LieType::B, LieType::C, LieType::D] {
            for n in 2..=4 {
                let s = sys(kind, n);
                for r in s.positive_roots() {
                    assert!(s.root_vector(r).unwrap().preserves_form(), "{kind:?} {r}");
                }
            }
        }
    }

    #[test]
    fn dual_scale_cases() {
        assert_eq!(
            sys(LieType::A, 4).dual_scale(Root::diff(1, 3)).unwrap(),
            Scalar::one()
        );
        assert_eq!(
            sys(LieType::B, 2).dual_scale(Root::short(2)).unwrap(),
            Scalar::from_ratio(1, 4)
        );
        assert_eq!(
            sys(LieType::D, 4).dual_scale(Root::sum(1, 2)).unwrap(),
            Scalar::from_ratio(1, 2)
        );
        assert_eq!(
            sys(LieType::C, 3).dual_scale(Root::long(2)).unwrap(),
            Scalar::one()
        );
    }

    fn int_weight(w: &[BigRational]) -> Vec<i64> {
        w.iter()
            .map(|x| {
                assert!(x.denom().is_one(), "non-integral weight entry {x}");
                i64::try_from(x.numer().clone()).unwrap()
            })
            .collect()
    }

    #[test]
    fn generator_weights() {
        // (1 − w₀)ϖ_2 for sl_4 is ε1+ε2−ε3−ε4.
        let a3 = sys(LieType::A, 4);
        assert_eq!(int_weight(&a3.generator_weight(2).unwrap()), vec![1, 1, -1, -1]);
        // Rank-2 case of the same formula.
        let a2 = sys(LieType::A, 3);
        assert_eq!(int_weight(&a2.generator_weight(1).unwrap()), vec![1, 0, -1]);
        // Type C: 2ε1 + ... + 2εi.
        let c3 = sys(LieType::C, 3);
        assert_eq!(int_weight(&c3.generator_weight(2).unwrap()), vec![2, 2, 0]);
        // Type D with n even, i = n−1: ε1 + ... + ε_{n-1} − ε_n.
        let d4 = sys(LieType::D, 4);
        assert_eq!(int_weight(&d4.generator_weight(3).unwrap()), vec![1, 1, 1, -1]);
        assert_eq!(int_weight(&d4.generator_weight(4).unwrap()), vec![1, 1, 1, 1]);
        // Type B odd top index uses the half-sum fundamental weight.
        let b3 = sys(LieType::B, 3);
        assert_eq!(int_weight(&b3.generator_weight(3).unwrap()), vec![1, 1, 1]);
        assert_eq!(int_weight(&b3.generator_weight(1).unwrap()), vec![2, 0, 0]);
        assert_eq!(int_weight(&b3.generator_weight(2).unwrap()), vec![1, 1, 0]);
    }

    #[test]
    fn jacobi_small_ranks() {
        for (kind, n) in [
            (LieType::A, 4u32),
            (LieType::B, 3),
            (LieType::C, 3),
            (LieType::D, 3),
        ] {
            let s = sys(kind, n);
            let roots = s.positive_roots();
            let vecs: Vec<SparseMatrix> =
                roots.iter().map(|r| s.root_vector(*r).unwrap()).collect();
            for x in &vecs {
                for y in &vecs {
                    for z in &vecs {
                        let j = x
                            .commutator(&y.commutator(z))
                            .add(&y.commutator(&z.commutator(x)))
                            .add(&z.commutator(&x.commutator(y)));
                        assert!(j.is_zero());
                    }
                }
            }
        }
    }
}
