//! Linear orders on basis weights, the inductive construction of the index
//! sets N_k with their cascade roots β_k, closed-form finite cascades, and
//! truncation of an infinite order to a finite subsystem.
//!
//! An order is always described on the symbols ϑ_i (i ∈ ℤ_{>0}); for the
//! Z₂-linear orders of types B/C/D the sign choice ϑ_i = ±ε_i is carried
//! separately in `flipped` and only matters for the type-D validation of the
//! minimal positive element.

use crate::error::{Error, Result};
use crate::rootsys::{LieType, Root, RootSystem};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TailRule {
    /// ϑ_a ≻ ϑ_b for a < b (indices increase downwards).
    Increasing,
    /// ϑ_a ≻ ϑ_b for a > b (no maximal element).
    Decreasing,
    /// Odd indices descend from the top, even indices ascend from the bottom:
    /// ϑ1 ≻ ϑ3 ≻ ϑ5 ≻ … ≻ ϑ6 ≻ ϑ4 ≻ ϑ2.
    OutsideIn,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrderKind {
    Natural,
    OutsideIn,
    Prefix { head: Vec<u32>, tail: TailRule },
}

/// A finitely-described linear order on {ϑ_i, i ∈ ℤ_{>0}}.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderSpec {
    pub kind: OrderKind,
    /// Indices with ϑ_i = −ε_i. Irrelevant for type A and for the cascade
    /// itself; consulted by the type-D order validation.
    #[serde(default, skip_serializing_if = "BTreeSet::is_empty")]
    pub flipped: BTreeSet<u32>,
}

impl OrderSpec {
    pub fn natural() -> Self {
        OrderSpec {
            kind: OrderKind::Natural,
            flipped: BTreeSet::new(),
        }
    }

    pub fn outside_in() -> Self {
        OrderSpec {
            kind: OrderKind::OutsideIn,
            flipped: BTreeSet::new(),
        }
    }

    pub fn prefix(head: Vec<u32>, tail: TailRule) -> Result<Self> {
        let set: BTreeSet<u32> = head.iter().copied().collect();
        if set.len() != head.len() || set.contains(&0) {
            return Err(Error::InvalidOrderSpec(
                "prefix indices must be distinct positive integers".into(),
            ));
        }
        Ok(OrderSpec {
            kind: OrderKind::Prefix { head, tail },
            flipped: BTreeSet::new(),
        })
    }

    /// Parse the CLI DSL: `natural`, `outside-in`,
    /// `prefix:1,3,5;tail:decreasing`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "natural" => return Ok(OrderSpec::natural()),
            "outside-in" => return Ok(OrderSpec::outside_in()),
            _ => {}
        }
        let err = || Error::InvalidOrderSpec(format!("cannot parse order {s:?}"));
        let (head_part, tail_part) = s.split_once(';').ok_or_else(err)?;
        let head_str = head_part.strip_prefix("prefix:").ok_or_else(err)?;
        let tail_str = tail_part.strip_prefix("tail:").ok_or_else(err)?;
        let head: Vec<u32> = head_str
            .split(',')
            .filter(|p| !p.trim().is_empty())
            .map(|p| p.trim().parse::<u32>().map_err(|_| err()))
            .collect::<Result<_>>()?;
        let tail = match tail_str.trim() {
            "increasing" => TailRule::Increasing,
            "decreasing" => TailRule::Decreasing,
            "outside-in" => TailRule::OutsideIn,
            _ => return Err(err()),
        };
        OrderSpec::prefix(head, tail)
    }

    fn head(&self) -> &[u32] {
        match &self.kind {
            OrderKind::Prefix { head, .. } => head,
            _ => &[],
        }
    }

    fn tail_rule(&self) -> TailRule {
        match &self.kind {
            OrderKind::Natural => TailRule::Increasing,
            OrderKind::OutsideIn => TailRule::OutsideIn,
            OrderKind::Prefix { tail, .. } => *tail,
        }
    }

    fn in_head(&self, i: u32) -> Option<usize> {
        self.head().iter().position(|&h| h == i)
    }

    /// Strict comparison: `Greater` when ϑ_a ≻ ϑ_b.
    pub fn succ_cmp(&self, a: u32, b: u32) -> Ordering {
        if a == b {
            return Ordering::Equal;
        }
        match (self.in_head(a), self.in_head(b)) {
            (Some(pa), Some(pb)) => pb.cmp(&pa),
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (None, None) => match self.tail_rule() {
                TailRule::Increasing => b.cmp(&a),
                TailRule::Decreasing => a.cmp(&b),
                TailRule::OutsideIn => {
                    let (oa, ob) = (a % 2 == 1, b % 2 == 1);
                    match (oa, ob) {
                        (true, false) => Ordering::Greater,
                        (false, true) => Ordering::Less,
                        (true, true) => b.cmp(&a),
                        (false, false) => a.cmp(&b),
                    }
                }
            },
        }
    }

    /// Maximal element of ℤ_{>0} ∖ used, if one exists.
    pub fn max_remaining(&self, used: &BTreeSet<u32>) -> Option<u32> {
        for &h in self.head() {
            if !used.contains(&h) {
                return Some(h);
            }
        }
        let skip: BTreeSet<u32> = used.iter().copied().chain(self.head().iter().copied()).collect();
        match self.tail_rule() {
            TailRule::Increasing => Some(first_not_in(&skip, |_| true)),
            TailRule::Decreasing => None,
            TailRule::OutsideIn => Some(first_not_in(&skip, |i| i % 2 == 1)),
        }
    }

    /// Minimal element of ℤ_{>0} ∖ used, if one exists. The tail is always
    /// infinite, so the minimum never comes from the explicit prefix.
    pub fn min_remaining(&self, used: &BTreeSet<u32>) -> Option<u32> {
        let skip: BTreeSet<u32> = used.iter().copied().chain(self.head().iter().copied()).collect();
        match self.tail_rule() {
            TailRule::Increasing => None,
            TailRule::Decreasing => Some(first_not_in(&skip, |_| true)),
            TailRule::OutsideIn => Some(first_not_in(&skip, |i| i % 2 == 0)),
        }
    }
}

fn first_not_in(skip: &BTreeSet<u32>, pred: impl Fn(u32) -> bool) -> u32 {
    (1..).find(|i| pred(*i) && !skip.contains(i)).unwrap()
}

/// A cascade root in ϑ-coordinates. Unlike [`Root`], the two-index kinds do
/// not require i < j: the first index is the ≻-larger one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CascadeRoot {
    Diff { i: u32, j: u32 },
    Sum { i: u32, j: u32 },
    Long { i: u32 },
}

impl fmt::Display for CascadeRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CascadeRoot::Diff { i, j } => write!(f, "t{i}-t{j}"),
            CascadeRoot::Sum { i, j } => write!(f, "t{i}+t{j}"),
            CascadeRoot::Long { i } => write!(f, "2t{i}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CascadeStep {
    pub k: u32,
    pub n_k: Vec<u32>,
    pub beta: CascadeRoot,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cascade {
    pub steps: Vec<CascadeStep>,
    /// True when the induction stabilized before `k_max` steps.
    pub exhausted: bool,
}

impl Cascade {
    pub fn roots(&self) -> Vec<CascadeRoot> {
        self.steps.iter().map(|s| s.beta).collect()
    }
}

/// Run the inductive construction of N_1 ⊆ N_2 ⊆ … for `k_max` steps.
pub fn cascade_steps(kind: LieType, order: &OrderSpec, k_max: u32) -> Result<Cascade> {
    if kind == LieType::D {
        // Literal reading of the admissibility constraint: a minimal positive
        // element, when it exists, must be an unflipped index.
        if let Some(min) = order.min_remaining(&BTreeSet::new()) {
            if order.flipped.contains(&min) {
                return Err(Error::MinimalPositiveViolation { index: min });
            }
        }
    }
    let mut used: BTreeSet<u32> = BTreeSet::new();
    let mut steps = Vec::new();
    let mut exhausted = false;
    for k in 1..=k_max {
        let beta = match kind {
            LieType::A => {
                let hi = order.max_remaining(&used);
                let lo = order.min_remaining(&used);
                match (hi, lo) {
                    (Some(i), Some(j)) => {
                        used.insert(i);
                        used.insert(j);
                        CascadeRoot::Diff { i, j }
                    }
                    _ => {
                        exhausted = true;
                        break;
                    }
                }
            }
            LieType::C => match order.max_remaining(&used) {
                Some(i) => {
                    used.insert(i);
                    CascadeRoot::Long { i }
                }
                None => {
                    exhausted = true;
                    break;
                }
            },
            LieType::B | LieType::D => {
                let hi = order.max_remaining(&used);
                match hi {
                    Some(i) => {
                        let mut used2 = used.clone();
                        used2.insert(i);
                        match order.max_remaining(&used2) {
                            Some(j) => {
                                used.insert(i);
                                used.insert(j);
                                CascadeRoot::Sum { i, j }
                            }
                            None => {
                                exhausted = true;
                                break;
                            }
                        }
                    }
                    None => {
                        exhausted = true;
                        break;
                    }
                }
            }
        };
        steps.push(CascadeStep {
            k,
            n_k: used.iter().copied().collect(),
            beta,
        });
    }
    Ok(Cascade { steps, exhausted })
}

/// The closed-form cascade of the finite system, in index order β_1, …, β_m.
pub fn finite_cascade(sys: RootSystem) -> Vec<Root> {
    let n = sys.rank;
    match sys.kind {
        LieType::A => (1..=n / 2).map(|i| Root::diff(i, n - i + 1)).collect(),
        LieType::C => (1..=n).map(Root::long).collect(),
        LieType::B => {
            let mut out = Vec::new();
            for i in 1..=n / 2 {
                out.push(Root::diff(2 * i - 1, 2 * i));
                out.push(Root::sum(2 * i - 1, 2 * i));
            }
            if n % 2 == 1 {
                out.push(Root::short(n));
            }
            out
        }
        LieType::D => {
            let mut out = Vec::new();
            for i in 1..=n / 2 {
                out.push(Root::diff(2 * i - 1, 2 * i));
                out.push(Root::sum(2 * i - 1, 2 * i));
            }
            out
        }
    }
}

/// Run the infinite-rank induction on the finite ground set {1, …, n} with
/// its natural order; used to compare against [`finite_cascade`].
pub fn inductive_cascade_finite(sys: RootSystem) -> Vec<Root> {
    let n = sys.rank;
    let mut remaining: BTreeSet<u32> = (1..=n).collect();
    let mut out = Vec::new();
    loop {
        match sys.kind {
            LieType::A => {
                if remaining.len() < 2 {
                    break;
                }
                let i = *remaining.iter().next().unwrap();
                let j = *remaining.iter().last().unwrap();
                remaining.remove(&i);
                remaining.remove(&j);
                out.push(Root::diff(i, j));
            }
            LieType::C => {
                let Some(&i) = remaining.iter().next() else {
                    break;
                };
                remaining.remove(&i);
                out.push(Root::long(i));
            }
            LieType::B | LieType::D => {
                if remaining.len() < 2 {
                    break;
                }
                let i = *remaining.iter().next().unwrap();
                remaining.remove(&i);
                let j = *remaining.iter().next().unwrap();
                remaining.remove(&j);
                out.push(Root::sum(i, j));
            }
        }
    }
    out
}

/// The subset ℬ′ of the finite cascade that controls central generation.
/// The B/D variant is included as displayed but is unused downstream.
pub fn b_prime(sys: RootSystem) -> Vec<Root> {
    let n = sys.rank;
    let full = finite_cascade(sys);
    match sys.kind {
        LieType::A => {
            if n % 2 == 1 {
                full
            } else {
                let m = n / 2;
                full.into_iter()
                    .filter(|r| *r != Root::diff(m, n - m + 1))
                    .collect()
            }
        }
        LieType::C => full
            .into_iter()
            .filter(|r| *r != Root::long(n))
            .collect(),
        LieType::B | LieType::D => (1..)
            .take_while(|i| 2 * i < n)
            .map(|i| Root::sum(2 * i - 1, 2 * i + 1))
            .collect(),
    }
}

/// Strong orthogonality: no pairwise sum or difference of the given roots is
/// again a positive root.
pub fn is_strongly_orthogonal(sys: RootSystem, roots: &[Root]) -> bool {
    for (a, r) in roots.iter().enumerate() {
        for s in roots.iter().skip(a + 1) {
            if sys.add_roots(*r, *s).is_some() {
                return false;
            }
            let mut diff = r.weight(sys.rank);
            for (x, y) in diff.iter_mut().zip(s.weight(sys.rank)) {
                *x -= y;
            }
            let neg: Vec<i64> = diff.iter().map(|x| -x).collect();
            if sys.root_from_weight(&diff).is_some() || sys.root_from_weight(&neg).is_some() {
                return false;
            }
        }
    }
    true
}

/// Order-preserving identification of the abstract rank-|M| system with the
/// subsystem spanned by a finite index set M: the abstract ε_i maps to
/// ϑ_{support[i-1]}, where support lists M sorted descending by ≻.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Truncation {
    pub sys: RootSystem,
    pub support: Vec<u32>,
}

pub fn truncate(kind: LieType, order: &OrderSpec, m_set: &BTreeSet<u32>) -> Result<Truncation> {
    if m_set.is_empty() || m_set.contains(&0) {
        return Err(Error::InvalidOrderSpec(
            "truncation set must be a nonempty set of positive indices".into(),
        ));
    }
    let mut support: Vec<u32> = m_set.iter().copied().collect();
    support.sort_by(|a, b| order.succ_cmp(*b, *a));
    let sys = RootSystem::new(kind, support.len() as u32)?;
    Ok(Truncation { sys, support })
}

impl Truncation {
    /// Image of an abstract root under the embedding, in ϑ-coordinates.
    pub fn map_root(&self, r: Root) -> CascadeRoot {
        let theta = |i: u32| self.support[i as usize - 1];
        match r {
            Root::Diff { i, j } => CascadeRoot::Diff {
                i: theta(i),
                j: theta(j),
            },
            Root::Sum { i, j } => CascadeRoot::Sum {
                i: theta(i),
                j: theta(j),
            },
            Root::Long { i } => CascadeRoot::Long { i: theta(i) },
            Root::Short { .. } => unreachable!("short roots have no infinite-rank analogue here"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dsl_roundtrip() {
        assert_eq!(OrderSpec::parse("natural").unwrap(), OrderSpec::natural());
        assert_eq!(
            OrderSpec::parse("outside-in").unwrap(),
            OrderSpec::outside_in()
        );
        let p = OrderSpec::parse("prefix:1,3,5;tail:decreasing").unwrap();
        assert_eq!(
            p.kind,
            OrderKind::Prefix {
                head: vec![1, 3, 5],
                tail: TailRule::Decreasing
            }
        );
        assert!(OrderSpec::parse("prefix:1,1;tail:increasing").is_err());
        assert!(OrderSpec::parse("sideways").is_err());
    }

    #[test]
    fn zigzag_cascade_prefix() {
        let c = cascade_steps(LieType::A, &OrderSpec::outside_in(), 3).unwrap();
        assert!(!c.exhausted);
        assert_eq!(
            c.roots(),
            vec![
                CascadeRoot::Diff { i: 1, j: 2 },
                CascadeRoot::Diff { i: 3, j: 4 },
                CascadeRoot::Diff { i: 5, j: 6 }
            ]
        );
        assert_eq!(c.steps[1].n_k, vec![1, 2, 3, 4]);
    }

    #[test]
    fn natural_order_type_a_is_empty() {
        let c = cascade_steps(LieType::A, &OrderSpec::natural(), 5).unwrap();
        assert!(c.exhausted);
        assert!(c.steps.is_empty());
    }

    #[test]
    fn natural_order_other_types() {
        let c = cascade_steps(LieType::C, &OrderSpec::natural(), 3).unwrap();
        assert_eq!(
            c.roots(),
            vec![
                CascadeRoot::Long { i: 1 },
                CascadeRoot::Long { i: 2 },
                CascadeRoot::Long { i: 3 }
            ]
        );
        let c = cascade_steps(LieType::B, &OrderSpec::natural(), 2).unwrap();
        assert_eq!(
            c.roots(),
            vec![
                CascadeRoot::Sum { i: 1, j: 2 },
                CascadeRoot::Sum { i: 3, j: 4 }
            ]
        );
    }

    #[test]
    fn prefix_increasing_stalls_type_a() {
        let order = OrderSpec::parse("prefix:1;tail:increasing").unwrap();
        let c = cascade_steps(LieType::A, &order, 3).unwrap();
        assert!(c.exhausted);
        assert!(c.steps.is_empty());
    }

    #[test]
    fn finite_cascades() {
        let a4 = RootSystem::new(LieType::A, 4).unwrap();
        assert_eq!(
            finite_cascade(a4),
            vec![Root::diff(1, 4), Root::diff(2, 3)]
        );
        let c3 = RootSystem::new(LieType::C, 3).unwrap();
        assert_eq!(
            finite_cascade(c3),
            vec![Root::long(1), Root::long(2), Root::long(3)]
        );
        let b3 = RootSystem::new(LieType::B, 3).unwrap();
        assert_eq!(
            finite_cascade(b3),
            vec![Root::diff(1, 2), Root::sum(1, 2), Root::short(3)]
        );
    }

    #[test]
    fn b_prime_cases() {
        let a5 = RootSystem::new(LieType::A, 5).unwrap();
        assert_eq!(b_prime(a5), finite_cascade(a5));
        let a4 = RootSystem::new(LieType::A, 4).unwrap();
        assert_eq!(b_prime(a4), vec![Root::diff(1, 4)]);
        let c3 = RootSystem::new(LieType::C, 3).unwrap();
        assert_eq!(b_prime(c3), vec![Root::long(1), Root::long(2)]);
    }

    #[test]
    fn strong_orthogonality_of_cascades() {
        for (kind, n) in [
            (LieType::A, 7u32),
            (LieType::B, 5),
            (LieType::C, 5),
            (LieType::D, 6),
        ] {
            let sys = RootSystem::new(kind, n).unwrap();
            assert!(is_strongly_orthogonal(sys, &finite_cascade(sys)));
        }
    }

    #[test]
    fn truncation_examples() {
        let m: BTreeSet<u32> = [1, 2, 3].into_iter().collect();
        let t = truncate(LieType::A, &OrderSpec::natural(), &m).unwrap();
        assert_eq!(t.support, vec![1, 2, 3]);

        // Order ϑ1 ≻ ϑ3 ≻ ϑ2 as an explicit prefix.
        let order = OrderSpec::prefix(vec![1, 3, 2], TailRule::Increasing).unwrap();
        let t = truncate(LieType::A, &order, &m).unwrap();
        assert_eq!(t.support, vec![1, 3, 2]);

        let m: BTreeSet<u32> = [2, 5].into_iter().collect();
        let t = truncate(LieType::C, &OrderSpec::natural(), &m).unwrap();
        assert_eq!(t.support, vec![2, 5]);
        assert_eq!(
            t.map_root(Root::long(2)),
            CascadeRoot::Long { i: 5 }
        );
    }

    #[test]
    fn flipped_minimal_element_rejected_for_d() {
        let mut order = OrderSpec::outside_in();
        order.flipped.insert(2);
        assert!(matches!(
            cascade_steps(LieType::D, &order, 2),
            Err(Error::MinimalPositiveViolation { index: 2 })
        ));
        assert!(cascade_steps(LieType::B, &order, 2).is_ok());
    }
}
