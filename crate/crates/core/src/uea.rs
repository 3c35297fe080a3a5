//! Exact arithmetic in the enveloping algebra of the nilradical (PBW normal
//! form), in its symmetric algebra, the symmetrization map, centrality
//! testing, and a brute-force solver for the center in low degree.
//!
//! PBW words are weakly increasing sequences of root indices under the fixed
//! global order of [`RootSystem::positive_roots`]. Products are normalized by
//! rewriting x·y → y·x + [x, y]; the rewriting terminates because each
//! correction term is strictly shorter and each swap removes an inversion.

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::par;
use crate::rootsys::{Root, RootSystem};
use crate::scalar::Scalar;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// A monomial: indices into the positive-root list, weakly increasing.
pub type Word = Vec<u32>;

/// Structure-constant context for one nilradical. All tables are derived
/// from the matrix realization at construction time and never mutated, so a
/// value can be shared freely across threads.
pub struct Nilradical {
    sys: RootSystem,
    roots: Vec<Root>,
    index: HashMap<Root, u32>,
    brackets: Vec<Vec<Option<(u32, Scalar)>>>,
    weights: Vec<Vec<i64>>,
}

impl Nilradical {
    pub fn new(sys: RootSystem) -> Result<Self> {
        let roots = sys.positive_roots();
        let index: HashMap<Root, u32> = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (*r, i as u32))
            .collect();
        let mut brackets = vec![vec![None; roots.len()]; roots.len()];
        for (a, ra) in roots.iter().enumerate() {
            for (b, rb) in roots.iter().enumerate() {
                let exp = sys.bracket_in_basis(*ra, *rb)?;
                match exp.len() {
                    0 => {}
                    1 => {
                        let (r, c) = exp.into_iter().next().unwrap();
                        brackets[a][b] = Some((index[&r], c));
                    }
                    _ => return Err(Error::ResidualNonZero),
                }
            }
        }
        let weights = roots.iter().map(|r| r.weight(sys.rank)).collect();
        Ok(Nilradical {
            sys,
            roots,
            index,
            brackets,
            weights,
        })
    }

    pub fn sys(&self) -> RootSystem {
        self.sys
    }

    pub fn dim(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root_index(&self, r: Root) -> Result<u32> {
        self.index.get(&r).copied().ok_or(Error::RootNotInSystem {
            kind: self.sys.kind,
            rank: self.sys.rank,
            root: r,
        })
    }

    /// [e_a, e_b] in the root basis; `None` when the bracket vanishes.
    pub fn bracket(&self, a: u32, b: u32) -> Option<&(u32, Scalar)> {
        self.brackets[a as usize][b as usize].as_ref()
    }

    pub fn commutes(&self, a: u32, b: u32) -> bool {
        self.brackets[a as usize][b as usize].is_none()
    }

    pub fn weight_of(&self, idx: u32) -> &[i64] {
        &self.weights[idx as usize]
    }

    fn check(&self, e: &UeaElement) -> Result<()> {
        if e.sys == self.sys {
            Ok(())
        } else {
            Err(Error::MixedSystems)
        }
    }

    fn check_sym(&self, p: &SymPoly) -> Result<()> {
        if p.sys == self.sys {
            Ok(())
        } else {
            Err(Error::MixedSystems)
        }
    }

    pub fn zero(&self) -> UeaElement {
        UeaElement {
            sys: self.sys,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(&self) -> UeaElement {
        let mut terms = BTreeMap::new();
        terms.insert(Vec::new(), Scalar::one());
        UeaElement {
            sys: self.sys,
            terms,
        }
    }

    pub fn generator(&self, r: Root) -> Result<UeaElement> {
        let idx = self.root_index(r)?;
        let mut terms = BTreeMap::new();
        terms.insert(vec![idx], Scalar::one());
        Ok(UeaElement {
            sys: self.sys,
            terms,
        })
    }

    pub fn element_from_terms(
        &self,
        terms: impl IntoIterator<Item = (Word, Scalar)>,
    ) -> UeaElement {
        let mut out = self.zero();
        for (w, c) in terms {
            debug_assert!(w.windows(2).all(|p| p[0] <= p[1]));
            out.add_term(w, c);
        }
        out
    }

    /// Normalize an arbitrary word into PBW form, scaled by `coeff`.
    pub fn normalize_word(&self, word: &[u32], coeff: Scalar) -> UeaElement {
        let mut out = self.zero();
        let mut stack: Vec<(Word, Scalar)> = vec![(word.to_vec(), coeff)];
        while let Some((w, c)) = stack.pop() {
            if c.is_zero() {
                continue;
            }
            match w.windows(2).position(|p| p[0] > p[1]) {
                None => out.add_term(w, c),
                Some(p) => {
                    let mut swapped = w.clone();
                    swapped.swap(p, p + 1);
                    if let Some((idx, s)) = self.bracket(w[p], w[p + 1]) {
                        let mut contracted = Vec::with_capacity(w.len() - 1);
                        contracted.extend_from_slice(&w[..p]);
                        contracted.push(*idx);
                        contracted.extend_from_slice(&w[p + 2..]);
                        stack.push((contracted, &c * s));
                    }
                    stack.push((swapped, c));
                }
            }
        }
        out
    }

    /// Product in PBW normal form.
    pub fn mul(&self, a: &UeaElement, b: &UeaElement) -> Result<UeaElement> {
        self.check(a)?;
        self.check(b)?;
        let mut out = self.zero();
        for (wa, ca) in &a.terms {
            for (wb, cb) in &b.terms {
                let mut w = Vec::with_capacity(wa.len() + wb.len());
                w.extend_from_slice(wa);
                w.extend_from_slice(wb);
                out.add_assign(&self.normalize_word(&w, ca * cb));
            }
        }
        Ok(out)
    }

    pub fn commutator(&self, a: &UeaElement, b: &UeaElement) -> Result<UeaElement> {
        self.check(a)?;
        self.check(b)?;
        if self.supports_commute(a, b) {
            return Ok(self.zero());
        }
        let ab = self.mul(a, b)?;
        let ba = self.mul(b, a)?;
        Ok(ab.sub(&ba))
    }

    /// True when every generator occurring in `a` commutes with every
    /// generator occurring in `b`; the commutator is then zero without any
    /// expansion.
    pub fn supports_commute(&self, a: &UeaElement, b: &UeaElement) -> bool {
        let sa = a.support();
        let sb = b.support();
        sa.iter()
            .all(|&x| sb.iter().all(|&y| self.commutes(x, y)))
    }

    /// Symmetrization σ: S(n) → U(n). Monomials whose factors pairwise
    /// commute map straight onto the corresponding PBW word; otherwise all
    /// orderings are averaged. Capped at 8 factors.
    pub fn symmetrize(&self, p: &SymPoly) -> Result<UeaElement> {
        self.check_sym(p)?;
        let mut out = self.zero();
        for (mono, c) in &p.terms {
            if mono.len() > 8 {
                return Err(Error::BudgetExceeded {
                    what: "symmetrization factors",
                    limit: 8,
                });
            }
            let commuting = mono.iter().enumerate().all(|(i, &x)| {
                mono.iter()
                    .skip(i + 1)
                    .all(|&y| self.commutes(x, y))
            });
            if commuting {
                out.add_term(mono.clone(), c.clone());
            } else {
                let mut perm = mono.clone();
                let k_fact: u64 = (1..=perm.len() as u64).product();
                let scale = &Scalar::from_int(k_fact as i64).inv() * c;
                let mut acc = self.zero();
                heap_permutations(&mut perm, &mut |w| {
                    acc.add_assign(&self.normalize_word(w, Scalar::one()));
                });
                out.add_assign(&acc.scale(&scale));
            }
        }
        Ok(out)
    }

    /// Roots whose generators fail to commute with `u`.
    pub fn centrality_violations(&self, u: &UeaElement, parallel: bool) -> Result<Vec<Root>> {
        self.check(u)?;
        let idxs: Vec<u32> = (0..self.dim() as u32).collect();
        let hits = par::map_vec(&idxs, parallel, |&idx| {
            let gen = self.element_from_terms([(vec![idx], Scalar::one())]);
            let c = self.commutator(u, &gen).expect("same system");
            (!c.is_zero()).then(|| self.roots[idx as usize])
        });
        Ok(hits.into_iter().flatten().collect())
    }

    pub fn is_central(&self, u: &UeaElement) -> Result<bool> {
        Ok(self
            .centrality_violations(u, par::parallel_compiled())?
            .is_empty())
    }

    /// Basis of the positive-degree part of the center up to `max_degree`,
    /// found by solving the linear system [u, e_α] = 0 on PBW monomials one
    /// weight block at a time. The block decomposition is valid because the
    /// diagonal torus acts on the center by derivations, so the center is
    /// spanned by weight-homogeneous elements.
    pub fn center_basis_upto(&self, max_degree: u32, parallel: bool) -> Result<Vec<UeaElement>> {
        if self.dim() > 12 || max_degree > 4 {
            return Err(Error::BudgetExceeded {
                what: "brute-force center search",
                limit: 4,
            });
        }
        let mut by_weight: BTreeMap<Vec<i64>, Vec<Word>> = BTreeMap::new();
        for w in enumerate_words(self.dim() as u32, max_degree) {
            if w.is_empty() {
                continue;
            }
            by_weight.entry(self.word_weight(&w)).or_default().push(w);
        }
        let blocks: Vec<(Vec<i64>, Vec<Word>)> = by_weight.into_iter().collect();
        let solved = par::map_vec(&blocks, parallel, |(_, monos)| self.solve_block(monos));
        let mut out = Vec::new();
        for block in solved {
            out.extend(block);
        }
        Ok(out)
    }

    fn solve_block(&self, monos: &[Word]) -> Vec<UeaElement> {
        // Rows: (generator, target monomial) pairs; columns: block monomials.
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for idx in 0..self.dim() as u32 {
            let gen = self.element_from_terms([(vec![idx], Scalar::one())]);
            let images: Vec<UeaElement> = monos
                .iter()
                .map(|m| {
                    let u = self.element_from_terms([(m.clone(), Scalar::one())]);
                    self.commutator(&u, &gen).expect("same system")
                })
                .collect();
            let mut targets: BTreeMap<Word, usize> = BTreeMap::new();
            for img in &images {
                for w in img.terms.keys() {
                    let next = targets.len();
                    targets.entry(w.clone()).or_insert(next);
                }
            }
            if targets.is_empty() {
                continue;
            }
            let mut mat = vec![vec![Scalar::zero(); monos.len()]; targets.len()];
            for (col, img) in images.iter().enumerate() {
                for (w, c) in &img.terms {
                    mat[targets[w]][col] = c.clone();
                }
            }
            rows.extend(mat);
        }
        if rows.is_empty() {
            // Every monomial in the block is already central.
            return monos
                .iter()
                .map(|m| self.element_from_terms([(m.clone(), Scalar::one())]))
                .collect();
        }
        let m = Matrix::from_rows(rows);
        m.nullspace()
            .into_iter()
            .map(|v| {
                self.element_from_terms(
                    monos
                        .iter()
                        .cloned()
                        .zip(v)
                        .filter(|(_, c)| !c.is_zero()),
                )
            })
            .collect()
    }

    pub fn word_weight(&self, w: &[u32]) -> Vec<i64> {
        let mut acc = vec![0i64; self.sys.rank as usize];
        for &idx in w {
            for (a, b) in acc.iter_mut().zip(self.weight_of(idx)) {
                *a += b;
            }
        }
        acc
    }

    pub fn sym_zero(&self) -> SymPoly {
        SymPoly {
            sys: self.sys,
            terms: BTreeMap::new(),
        }
    }

    pub fn sym_one(&self) -> SymPoly {
        let mut terms = BTreeMap::new();
        terms.insert(Vec::new(), Scalar::one());
        SymPoly {
            sys: self.sys,
            terms,
        }
    }

    pub fn sym_from_terms(&self, terms: impl IntoIterator<Item = (Word, Scalar)>) -> SymPoly {
        let mut out = self.sym_zero();
        for (mut w, c) in terms {
            w.sort_unstable();
            out.add_term(w, c);
        }
        out
    }

    pub fn symbol(&self, r: Root) -> Result<SymPoly> {
        let idx = self.root_index(r)?;
        Ok(self.sym_from_terms([(vec![idx], Scalar::one())]))
    }

    /// Forget the ordering of a PBW element, mapping each word to the
    /// corresponding commutative monomial.
    pub fn abelianization(&self, u: &UeaElement) -> Result<SymPoly> {
        self.check(u)?;
        Ok(self.sym_from_terms(u.terms.iter().map(|(w, c)| (w.clone(), c.clone()))))
    }
}

fn heap_permutations(items: &mut Word, visit: &mut impl FnMut(&[u32])) {
    let n = items.len();
    let mut c = vec![0usize; n];
    visit(items);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            visit(items);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// All weakly increasing words over `0..nvars` of length ≤ `max_len`,
/// including the empty word.
pub fn enumerate_words(nvars: u32, max_len: u32) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Word> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            let lo = w.last().copied().unwrap_or(0);
            for v in lo..nvars {
                let mut w2 = w.clone();
                w2.push(v);
                next.push(w2);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// An element of U(n) in PBW normal form: a finitely supported map from
/// sorted words to coefficients, with no zero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UeaElement {
    sys: RootSystem,
    terms: BTreeMap<Word, Scalar>,
}

/// An element of S(n): same storage, commutative semantics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPoly {
    sys: RootSystem,
    terms: BTreeMap<Word, Scalar>,
}

macro_rules! term_container {
    ($ty:ident) => {
        impl $ty {
            pub fn sys(&self) -> RootSystem {
                self.sys
            }

            pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
                self.terms.iter()
            }

            pub fn num_terms(&self) -> usize {
                self.terms.len()
            }

            pub fn is_zero(&self) -> bool {
                self.terms.is_empty()
            }

            pub fn coeff(&self, w: &[u32]) -> Scalar {
                self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
            }

            pub fn degree(&self) -> usize {
                self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
            }

            pub(crate) fn add_term(&mut self, w: Word, c: Scalar) {
                if c.is_zero() {
                    return;
                }
                use std::collections::btree_map::Entry;
                match self.terms.entry(w) {
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

            pub fn add_assign(&mut self, other: &$ty) {
                assert_eq!(self.sys, other.sys, "mixed root systems");
                for (w, c) in &other.terms {
                    self.add_term(w.clone(), c.clone());
                }
            }

            pub fn add(&self, other: &$ty) -> $ty {
                let mut out = self.clone();
                out.add_assign(other);
                out
            }

            pub fn sub(&self, other: &$ty) -> $ty {
                self.add(&other.scale(&-&Scalar::one()))
            }

            pub fn scale(&self, c: &Scalar) -> $ty {
                if c.is_zero() {
                    return $ty {
                        sys: self.sys,
                        terms: BTreeMap::new(),
                    };
                }
                $ty {
                    sys: self.sys,
                    terms: self
                        .terms
                        .iter()
                        .map(|(w, v)| (w.clone(), v * c))
                        .collect(),
                }
            }

            /// Distinct generator indices occurring in the element.
            pub fn support(&self) -> Vec<u32> {
                let mut s: Vec<u32> = self
                    .terms
                    .keys()
                    .flat_map(|w| w.iter().copied())
                    .collect();
                s.sort_unstable();
                s.dedup();
                s
            }

            /// The common weight of all terms, or `None` for inhomogeneous or
            /// zero elements. The empty word has weight zero.
            pub fn homogeneous_weight(&self, alg: &Nilradical) -> Option<Vec<i64>> {
                let mut it = self.terms.keys();
                let first = alg.word_weight(it.next()?);
                for w in it {
                    if alg.word_weight(w) != first {
                        return None;
                    }
                }
                Some(first)
            }
        }
    };
}

term_container!(UeaElement);
term_container!(SymPoly);

impl SymPoly {
    pub fn mul(&self, other: &SymPoly) -> SymPoly {
        assert_eq!(self.sys, other.sys, "mixed root systems");
        let mut out = SymPoly {
            sys: self.sys,
            terms: BTreeMap::new(),
        };
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                let mut w = Vec::with_capacity(wa.len() + wb.len());
                w.extend_from_slice(wa);
                w.extend_from_slice(wb);
                w.sort_unstable();
                out.add_term(w, ca * cb);
            }
        }
        out
    }

    /// Substitute f(e_α) for each symbol and multiply out.
    pub fn eval(&self, alg: &Nilradical, f: &LinearForm) -> Scalar {
        let values: Vec<Scalar> = (0..alg.dim())
            .map(|i| f.value(alg.roots()[i]))
            .collect();
        let mut acc = Scalar::zero();
        for (w, c) in &self.terms {
            let mut term = c.clone();
            for &idx in w {
                if term.is_zero() {
                    break;
                }
                term *= &values[idx as usize];
            }
            acc += &term;
        }
        acc
    }

    /// ∂/∂e_idx.
    pub fn partial(&self, idx: u32) -> SymPoly {
        let mut out = SymPoly {
            sys: self.sys,
            terms: BTreeMap::new(),
        };
        for (w, c) in &self.terms {
            let mult = w.iter().filter(|&&x| x == idx).count();
            if mult == 0 {
                continue;
            }
            let mut reduced = w.clone();
            let pos = reduced.iter().position(|&x| x == idx).unwrap();
            reduced.remove(pos);
            out.add_term(reduced, c * &Scalar::from_int(mult as i64));
        }
        out
    }
}

/// A linear form on the nilradical: finitely supported assignment of
/// coefficients to positive roots.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
pub struct LinearForm {
    pub support: BTreeMap<Root, Scalar>,
}

impl LinearForm {
    pub fn new() -> Self {
        LinearForm {
            support: BTreeMap::new(),
        }
    }

    pub fn set(&mut self, r: Root, v: Scalar) {
        if v.is_zero() {
            self.support.remove(&r);
        } else {
            self.support.insert(r, v);
        }
    }

    pub fn value(&self, r: Root) -> Scalar {
        self.support.get(&r).cloned().unwrap_or_else(Scalar::zero)
    }
}

fn serialize_terms<S: Serializer>(
    sys: RootSystem,
    terms: &BTreeMap<Word, Scalar>,
    name: &'static str,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Term {
        coeff: Scalar,
        mono: Vec<(Root, u32)>,
    }
    let roots = sys.positive_roots();
    let terms: Vec<Term> = terms
        .iter()
        .map(|(w, c)| {
            let mut mono: Vec<(Root, u32)> = Vec::new();
            for &idx in w {
                let r = roots[idx as usize];
                match mono.last_mut() {
                    Some((last, e)) if *last == r => *e += 1,
                    _ => mono.push((r, 1)),
                }
            }
            Term {
                coeff: c.clone(),
                mono,
            }
        })
        .collect();
    let mut st = serializer.serialize_struct(name, 1)?;
    st.serialize_field("terms", &terms)?;
    st.end()
}

impl Serialize for UeaElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_terms(self.sys, &self.terms, "UeaElement", serializer)
    }
}

impl Serialize for SymPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_terms(self.sys, &self.terms, "SymPoly", serializer)
    }
}

impl fmt::Display for UeaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let roots = self.sys.positive_roots();
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let word = w
                    .iter()
                    .map(|&i| format!("E({})", roots[i as usize]))
                    .collect::<Vec<_>>()
                    .join("*");
                if word.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c})*{word}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::LieType;
    use proptest::prelude::*;

    fn alg(kind: LieType, rank: u32) -> Nilradical {
        Nilradical::new(RootSystem::new(kind, rank).unwrap()).unwrap()
    }

    #[test]
    fn unit_law() {
        let a3 = alg(LieType::A, 4);
        let x = a3.generator(Root::diff(1, 3)).unwrap();
        assert_eq!(a3.mul(&a3.one(), &x).unwrap(), x);
        assert_eq!(a3.mul(&x, &a3.one()).unwrap(), x);
    }

    #[test]
    fn single_rewrite() {
        // e_{e2-e3} * e_{e1-e2} = e_{e1-e2} e_{e2-e3} - e_{e1-e3}.
        let a3 = alg(LieType::A, 4);
        let x = a3.generator(Root::diff(2, 3)).unwrap();
        let y = a3.generator(Root::diff(1, 2)).unwrap();
        let p = a3.mul(&x, &y).unwrap();
        let i12 = a3.root_index(Root::diff(1, 2)).unwrap();
        let i23 = a3.root_index(Root::diff(2, 3)).unwrap();
        let i13 = a3.root_index(Root::diff(1, 3)).unwrap();
        assert_eq!(p.coeff(&[i12, i23]), Scalar::one());
        assert_eq!(p.coeff(&[i13]), -&Scalar::one());
        assert_eq!(p.num_terms(), 2);
    }

    #[test]
    fn commutator_lifts_bracket() {
        let a3 = alg(LieType::A, 4);
        let x = a3.generator(Root::diff(1, 2)).unwrap();
        let y = a3.generator(Root::diff(2, 4)).unwrap();
        let c = a3.commutator(&x, &y).unwrap();
        assert_eq!(c, a3.generator(Root::diff(1, 4)).unwrap());
        assert!(a3.commutator(&x, &x).unwrap().is_zero());
    }

    #[test]
    fn symmetrize_cases() {
        let a2 = alg(LieType::A, 3);
        assert_eq!(a2.symmetrize(&a2.sym_one()).unwrap(), a2.one());

        // Two-term average: σ(xy) = xy − [x, y]/2 when x < y in the PBW
        // order, since yx normalizes to xy − [x, y].
        let ix = a2.root_index(Root::diff(1, 2)).unwrap();
        let iy = a2.root_index(Root::diff(2, 3)).unwrap();
        let iz = a2.root_index(Root::diff(1, 3)).unwrap();
        let p = a2.sym_from_terms([(vec![ix, iy], Scalar::one())]);
        let s = a2.symmetrize(&p).unwrap();
        assert_eq!(s.coeff(&[ix, iy]), Scalar::one());
        assert_eq!(s.coeff(&[iz]), Scalar::from_ratio(-1, 2));
        assert_eq!(s.num_terms(), 2);

        // Commuting factors pass through unchanged.
        let a3 = alg(LieType::A, 4);
        let i12 = a3.root_index(Root::diff(1, 2)).unwrap();
        let i34 = a3.root_index(Root::diff(3, 4)).unwrap();
        let q = a3.sym_from_terms([(vec![i12, i34], Scalar::from_int(5))]);
        let s = a3.symmetrize(&q).unwrap();
        assert_eq!(s.coeff(&[i12, i34]), Scalar::from_int(5));
        assert_eq!(s.num_terms(), 1);
    }

    #[test]
    fn highest_root_is_central() {
        for n in 3..=6 {
            let a = alg(LieType::A, n);
            let theta = a.generator(Root::diff(1, n)).unwrap();
            assert!(a.is_central(&theta).unwrap());
            let e12 = a.generator(Root::diff(1, 2)).unwrap();
            assert!(!a.is_central(&e12).unwrap());
        }
    }

    #[test]
    fn unit_is_central() {
        let c2 = alg(LieType::C, 2);
        assert!(c2.is_central(&c2.one()).unwrap());
    }

    #[test]
    fn brute_center_degree_one() {
        let a2 = alg(LieType::A, 3);
        let basis = a2.center_basis_upto(1, false).unwrap();
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0], a2.generator(Root::diff(1, 3)).unwrap());

        // Rank-1 type C is abelian.
        let c1 = alg(LieType::C, 1);
        let basis = c1.center_basis_upto(1, false).unwrap();
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0], c1.generator(Root::long(1)).unwrap());
    }

    #[test]
    fn eval_sym_examples() {
        let a3 = alg(LieType::A, 4);
        let sym = a3.symbol(Root::diff(1, 4)).unwrap();
        let mut f = LinearForm::new();
        f.set(Root::diff(1, 4), Scalar::from_int(7));
        assert_eq!(sym.eval(&a3, &f), Scalar::from_int(7));
        assert_eq!(sym.eval(&a3, &LinearForm::new()), Scalar::zero());
        assert_eq!(a3.sym_one().eval(&a3, &LinearForm::new()), Scalar::one());
    }

    #[test]
    fn element_json_shape() {
        let a2 = alg(LieType::A, 3);
        let x = a2.generator(Root::diff(1, 2)).unwrap();
        let sq = a2.mul(&x, &x).unwrap();
        let json = serde_json::to_value(&sq).unwrap();
        assert_eq!(
            json["terms"][0]["mono"][0],
            serde_json::json!([{ "kind": "diff", "i": 1, "j": 2 }, 2])
        );
    }

    fn arb_element(max_terms: usize) -> impl Strategy<Value = (u32, Vec<(Vec<u8>, i8)>)> {
        // Rank parameter for A plus raw term data; indices are reduced
        // modulo the algebra dimension when materialized.
        (
            3u32..=4,
            prop::collection::vec(
                (prop::collection::vec(0u8..12, 0..3), -3i8..=3),
                1..=max_terms,
            ),
        )
    }

    fn materialize(alg: &Nilradical, data: &[(Vec<u8>, i8)]) -> UeaElement {
        let dim = alg.dim() as u32;
        let mut out = alg.zero();
        for (word, c) in data {
            let mut w: Word = word.iter().map(|&x| x as u32 % dim).collect();
            w.sort_unstable();
            out.add_term(w, Scalar::from_int(*c as i64));
        }
        out
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn mul_is_associative((rank, da) in arb_element(2), db in arb_element(2), dc in arb_element(2)) {
            let alg = alg(LieType::A, rank);
            let a = materialize(&alg, &da);
            let b = materialize(&alg, &db.1);
            let c = materialize(&alg, &dc.1);
            let left = alg.mul(&alg.mul(&a, &b).unwrap(), &c).unwrap();
            let right = alg.mul(&a, &alg.mul(&b, &c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn commutator_antisymmetric_and_leibniz((rank, da) in arb_element(2), db in arb_element(2), dc in arb_element(2)) {
            let alg = alg(LieType::A, rank);
            let a = materialize(&alg, &da);
            let b = materialize(&alg, &db.1);
            let c = materialize(&alg, &dc.1);
            let ab = alg.commutator(&a, &b).unwrap();
            let ba = alg.commutator(&b, &a).unwrap();
            prop_assert_eq!(ab.clone(), ba.scale(&-&Scalar::one()));
            // [a, bc] = [a, b]c + b[a, c]
            let bc = alg.mul(&b, &c).unwrap();
            let lhs = alg.commutator(&a, &bc).unwrap();
            let rhs = alg
                .mul(&ab, &c)
                .unwrap()
                .add(&alg.mul(&b, &alg.commutator(&a, &c).unwrap()).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn products_preserve_homogeneous_weight((rank, da) in arb_element(1), db in arb_element(1)) {
            let alg = alg(LieType::A, rank);
            let a = materialize(&alg, &da);
            let b = materialize(&alg, &db.1);
            let p = alg.mul(&a, &b).unwrap();
            if let (Some(wa), Some(wb)) = (a.homogeneous_weight(&alg), b.homogeneous_weight(&alg)) {
                if !p.is_zero() {
                    let sum: Vec<i64> = wa.iter().zip(&wb).map(|(x, y)| x + y).collect();
                    prop_assert_eq!(p.homogeneous_weight(&alg), Some(sum));
                }
            }
        }
    }
}
