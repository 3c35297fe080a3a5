//! The canonical central generators and the minors attached to individual
//! positive roots.
//!
//! Types A and C use determinants of a matrix of root vectors laid out along
//! the cascade; types B and D use Pfaffians for even indices and sums of
//! bordered determinants for odd indices. All determinant and Pfaffian
//! entries within one minor commute, so the symbols are computed in S(n) and
//! carried to U(n) by symmetrization.

use crate::cascade::finite_cascade;
use crate::error::{Error, Result};
use crate::rootsys::{LieType, Root, RootSystem};
use crate::scalar::Scalar;
use crate::uea::{Nilradical, SymPoly, UeaElement};
use serde::Serialize;

/// Entry of the structured matrix: a root vector with an integer coefficient.
type Entry = Option<(Root, Scalar)>;

/// The upper-triangular matrix of root vectors whose minors realize the
/// central generators. Type A is n×n over 1..n; type C is 2n×2n over the
/// signed indices, skew along the antidiagonal with doubled long-root
/// entries.
pub struct UMatrix {
    sys: RootSystem,
}

impl UMatrix {
    pub fn new(sys: RootSystem) -> Result<UMatrix> {
        match sys.kind {
            LieType::A | LieType::C => Ok(UMatrix { sys }),
            _ => Err(Error::TypeNotSupported { expected: "A, C" }),
        }
    }

    pub fn entry(&self, r: i32, c: i32) -> Entry {
        let n = self.sys.rank as i32;
        match self.sys.kind {
            LieType::A => {
                if 0 < r && r < c && c <= n {
                    Some((Root::diff(r as u32, c as u32), Scalar::one()))
                } else {
                    None
                }
            }
            LieType::C => {
                if r > 0 && c > 0 && r < c {
                    Some((Root::diff(r as u32, c as u32), Scalar::one()))
                } else if r < 0 && c < 0 && -c < -r {
                    Some((Root::diff(-c as u32, -r as u32), -&Scalar::one()))
                } else if r > 0 && c < 0 && r != -c {
                    let (i, j) = (r.min(-c) as u32, r.max(-c) as u32);
                    Some((Root::sum(i, j), Scalar::one()))
                } else if r > 0 && c == -r {
                    Some((Root::long(r as u32), Scalar::from_int(2)))
                } else {
                    None
                }
            }
            _ => unreachable!(),
        }
    }

    /// Determinant of the submatrix on the given rows and columns, as a
    /// commutative polynomial. Callers are responsible for picking rows and
    /// columns whose entries commute.
    pub fn minor_symbol(&self, alg: &Nilradical, rows: &[i32], cols: &[i32]) -> Result<SymPoly> {
        assert_eq!(rows.len(), cols.len());
        let entry = |r: usize, c: usize| self.entry(rows[r], cols[c]);
        det_symbol(alg, rows.len(), &entry)
    }
}

/// Expand a k×k determinant of root-vector entries into S(n).
fn det_symbol(
    alg: &Nilradical,
    k: usize,
    entry: &dyn Fn(usize, usize) -> Entry,
) -> Result<SymPoly> {
    let mut out = alg.sym_zero();
    let mut cols: Vec<usize> = (0..k).collect();
    permute_det(alg, entry, &mut cols, 0, Scalar::one(), &mut Vec::new(), &mut out)?;
    Ok(out)
}

fn permute_det(
    alg: &Nilradical,
    entry: &dyn Fn(usize, usize) -> Entry,
    cols: &mut Vec<usize>,
    row: usize,
    sign: Scalar,
    picked: &mut Vec<(u32, Scalar)>,
    out: &mut SymPoly,
) -> Result<()> {
    if row == cols.len() {
        let mut coeff = sign;
        let mut word: Vec<u32> = Vec::with_capacity(picked.len());
        for (idx, c) in picked.iter() {
            coeff *= c;
            word.push(*idx);
        }
        out.add_assign(&alg.sym_from_terms([(word, coeff)]));
        return Ok(());
    }
    for slot in row..cols.len() {
        let col = cols[slot];
        if let Some((r, c)) = entry(row, col) {
            let flip = if slot == row { Scalar::one() } else { -&Scalar::one() };
            cols.swap(row, slot);
            picked.push((alg.root_index(r)?, c));
            permute_det(alg, entry, cols, row + 1, &sign * &flip, picked, out)?;
            picked.pop();
            cols.swap(row, slot);
        }
    }
    Ok(())
}

/// Pfaffian of the skew matrix with the given upper entries, expanded by
/// first-row reduction. `indices` lists the rows; `upper(a, b)` must return
/// the entry for a < b positionally.
fn pfaffian_symbol(
    alg: &Nilradical,
    indices: &[u32],
    upper: &dyn Fn(u32, u32) -> Entry,
) -> Result<SymPoly> {
    if indices.is_empty() {
        return Ok(alg.sym_one());
    }
    let mut out = alg.sym_zero();
    let first = indices[0];
    for (p, &j) in indices.iter().enumerate().skip(1) {
        let Some((root, coeff)) = upper(first, j) else {
            continue;
        };
        let rest: Vec<u32> = indices
            .iter()
            .copied()
            .filter(|&x| x != first && x != j)
            .collect();
        let sub = pfaffian_symbol(alg, &rest, upper)?;
        let sign = if p % 2 == 1 { Scalar::one() } else { -&Scalar::one() };
        let factor = alg.sym_from_terms([(vec![alg.root_index(root)?], &sign * &coeff)]);
        out.add_assign(&factor.mul(&sub));
    }
    Ok(out)
}

/// Per-root minor data: the level, the cascade roots above it, and the row
/// and column sets of the associated minor.
#[derive(Clone, Debug, Serialize)]
pub struct CascadeLevel {
    pub alpha: Root,
    pub level: u32,
    pub b_alpha: Vec<Root>,
    pub rows: Vec<i32>,
    pub cols: Vec<i32>,
}

pub fn cascade_level(sys: RootSystem, alpha: Root) -> Result<CascadeLevel> {
    if !sys.contains(alpha) {
        return Err(Error::RootNotInSystem {
            kind: sys.kind,
            rank: sys.rank,
            root: alpha,
        });
    }
    let n = sys.rank;
    let level = match sys.kind {
        LieType::A => {
            let by_row = alpha.row();
            let by_col = n - alpha.col() as u32 + 1;
            by_row.min(by_col)
        }
        LieType::C => alpha.row(),
        _ => return Err(Error::TypeNotSupported { expected: "A, C" }),
    };
    let cascade = finite_cascade(sys);
    let mut b_alpha = vec![alpha];
    b_alpha.extend(cascade.iter().copied().take(level as usize - 1));
    let mut rows: Vec<i32> = b_alpha.iter().map(|r| r.row() as i32).collect();
    let mut cols: Vec<i32> = b_alpha.iter().map(|r| r.col()).collect();
    rows.sort_unstable();
    cols.sort_by_key(|&c| sys.col_position(c));
    let distinct =
        |v: &[i32]| v.windows(2).all(|p| p[0] != p[1]);
    if !distinct(&rows) || !distinct(&cols) {
        return Err(Error::MalformedLevel { root: alpha });
    }
    Ok(CascadeLevel {
        alpha,
        level,
        b_alpha,
        rows,
        cols,
    })
}

/// The minor of the structured matrix attached to a positive root. For
/// cascade roots this is the canonical generator of the same level.
pub fn delta_minor_symbol(alg: &Nilradical, alpha: Root) -> Result<SymPoly> {
    let level = cascade_level(alg.sys(), alpha)?;
    let u = UMatrix::new(alg.sys())?;
    u.minor_symbol(alg, &level.rows, &level.cols)
}

pub fn delta_minor(alg: &Nilradical, alpha: Root) -> Result<UeaElement> {
    let sym = delta_minor_symbol(alg, alpha)?;
    alg.symmetrize(&sym)
}

fn check_generator_index(sys: RootSystem, i: u32) -> Result<()> {
    let m = sys.cascade_size();
    if i == 0 || i > m {
        return Err(Error::IndexOutOfRange {
            what: "generator",
            index: i,
            max: m,
        });
    }
    Ok(())
}

/// Symbol of the i-th determinant generator (types A and C).
pub fn delta_symbol(alg: &Nilradical, i: u32) -> Result<SymPoly> {
    let sys = alg.sys();
    check_generator_index(sys, i)?;
    let beta = finite_cascade(sys)[i as usize - 1];
    delta_minor_symbol(alg, beta)
}

/// The i-th determinant generator Δ_i as an element of U(n).
pub fn delta(alg: &Nilradical, i: u32) -> Result<UeaElement> {
    let sym = delta_symbol(alg, i)?;
    alg.symmetrize(&sym)
}

/// Symbol of the even-index Pfaffian generator (types B and D).
pub fn pfaffian_symbol_gen(alg: &Nilradical, i: u32) -> Result<SymPoly> {
    let sys = alg.sys();
    match sys.kind {
        LieType::B | LieType::D => {}
        _ => return Err(Error::TypeNotSupported { expected: "B, D" }),
    }
    check_generator_index(sys, i)?;
    if i % 2 != 0 {
        return Err(Error::ParityError {
            index: i,
            expected: "even",
        });
    }
    let indices: Vec<u32> = (1..=i).collect();
    let upper = |a: u32, b: u32| -> Entry { Some((Root::sum(a, b), Scalar::one())) };
    pfaffian_symbol(alg, &indices, &upper)
}

pub fn pfaffian_generator(alg: &Nilradical, i: u32) -> Result<UeaElement> {
    let sym = pfaffian_symbol_gen(alg, i)?;
    alg.symmetrize(&sym)
}

/// Whether the odd index i is one of the two bordered exceptional cases:
/// i = m for B with n odd, and i = m − 1 for D with n even.
pub fn is_bordered(sys: RootSystem, i: u32) -> bool {
    let n = sys.rank;
    match sys.kind {
        LieType::B => n % 2 == 1 && i == n,
        LieType::D => n % 2 == 0 && i == n - 1,
        _ => false,
    }
}

/// Symbol of the odd-index generator (types B and D): the quadratic-column
/// expansion for generic odd i, or the bordered Pfaffian at the exceptional
/// index. The generic sum is normalized by (−1)^((i−1)/2) so that its value
/// on cascade-supported forms is the positive product of cascade
/// coefficients.
pub fn odd_symbol(alg: &Nilradical, i: u32) -> Result<SymPoly> {
    let sys = alg.sys();
    let n = sys.rank;
    match sys.kind {
        LieType::B | LieType::D => {}
        _ => return Err(Error::TypeNotSupported { expected: "B, D" }),
    }
    check_generator_index(sys, i)?;
    if i % 2 != 1 {
        return Err(Error::ParityError {
            index: i,
            expected: "odd",
        });
    }

    if is_bordered(sys, i) {
        return match sys.kind {
            // Skew matrix over 1..n with a difference-root border column.
            LieType::D => {
                let indices: Vec<u32> = (1..=n).collect();
                let upper = |a: u32, b: u32| -> Entry {
                    if b < n {
                        Some((Root::sum(a, b), Scalar::one()))
                    } else {
                        Some((Root::diff(a, n), Scalar::one()))
                    }
                };
                pfaffian_symbol(alg, &indices, &upper)
            }
            // Skew matrix over 1..n+1 with a short-root border column.
            LieType::B => {
                let indices: Vec<u32> = (1..=n + 1).collect();
                let upper = |a: u32, b: u32| -> Entry {
                    if b <= n {
                        Some((Root::sum(a, b), Scalar::one()))
                    } else {
                        Some((Root::short(a), Scalar::one()))
                    }
                };
                pfaffian_symbol(alg, &indices, &upper)
            }
            _ => unreachable!(),
        };
    }

    // Generic odd index: ξ_i = ± Σ_s q_s · det(U^i with row s and column
    // i−s+1 removed), where q_s is the quadratic column polynomial.
    let quad = |s: u32| -> Result<SymPoly> {
        let mut acc = alg.sym_zero();
        for j in s + 1..=n {
            let d = alg.root_index(Root::diff(s, j))?;
            let p = alg.root_index(Root::sum(s, j))?;
            acc.add_assign(&alg.sym_from_terms([(vec![d, p], Scalar::one())]));
        }
        if sys.kind == LieType::B {
            let e = alg.root_index(Root::short(s))?;
            acc.add_assign(&alg.sym_from_terms([(vec![e, e], Scalar::from_ratio(1, 4))]));
        }
        Ok(acc)
    };
    // Entry of the antidiagonally-skew matrix U^i.
    let u_entry = |a: u32, b: u32| -> Entry {
        let partner = i - b + 1;
        if a < partner {
            Some((Root::sum(a, partner), Scalar::one()))
        } else if a == partner {
            None
        } else {
            Some((Root::sum(partner, a), -&Scalar::one()))
        }
    };
    let mut total = alg.sym_zero();
    for s in 1..=i {
        let rows: Vec<u32> = (1..=i).filter(|&r| r != s).collect();
        let cols: Vec<u32> = (1..=i).filter(|&c| c != i - s + 1).collect();
        let entry = |r: usize, c: usize| u_entry(rows[r], cols[c]);
        let minor = det_symbol(alg, rows.len(), &entry)?;
        total.add_assign(&quad(s)?.mul(&minor));
    }
    let sign = if ((i - 1) / 2) % 2 == 0 {
        Scalar::one()
    } else {
        -&Scalar::one()
    };
    Ok(total.scale(&sign))
}

/// The odd-index generator as (symbol, symmetrized element).
pub fn odd_generator(alg: &Nilradical, i: u32) -> Result<(SymPoly, UeaElement)> {
    let sym = odd_symbol(alg, i)?;
    let elt = alg.symmetrize(&sym)?;
    Ok((sym, elt))
}

/// Symbol of the i-th canonical generator ξ_i for any type, dispatching on
/// the index parity for B and D.
pub fn xi_symbol(alg: &Nilradical, i: u32) -> Result<SymPoly> {
    match alg.sys().kind {
        LieType::A | LieType::C => delta_symbol(alg, i),
        LieType::B | LieType::D => {
            if i % 2 == 0 {
                pfaffian_symbol_gen(alg, i)
            } else {
                odd_symbol(alg, i)
            }
        }
    }
}

/// Name tag used by the CLI (`delta:i`, `p:i`, `d:i`).
pub fn generator_tag(sys: RootSystem, i: u32) -> &'static str {
    match sys.kind {
        LieType::A | LieType::C => "delta",
        LieType::B | LieType::D => {
            if i % 2 == 0 {
                "p"
            } else {
                "d"
            }
        }
    }
}

/// All canonical generators of the system with their tags.
pub fn all_generators(alg: &Nilradical) -> Result<Vec<(String, SymPoly, UeaElement)>> {
    let sys = alg.sys();
    let mut out = Vec::new();
    for i in 1..=sys.cascade_size() {
        let sym = xi_symbol(alg, i)?;
        let elt = alg.symmetrize(&sym)?;
        out.push((format!("{}:{}", generator_tag(sys, i), i), sym, elt));
    }
    Ok(out)
}

/// The set of roots γ with [Δ_α, e_γ] ≠ 0 for a non-cascade positive root α
/// (types A and C).
pub fn ladder_set(sys: RootSystem, alpha: Root) -> Result<Vec<Root>> {
    if !sys.contains(alpha) {
        return Err(Error::RootNotInSystem {
            kind: sys.kind,
            rank: sys.rank,
            root: alpha,
        });
    }
    if finite_cascade(sys).contains(&alpha) {
        return Err(Error::CascadeRootNotAllowed { root: alpha });
    }
    let n = sys.rank;
    match (sys.kind, alpha) {
        (LieType::A, Root::Diff { i, j }) => {
            if j < n - i + 1 {
                Ok((j + 1..=n - i + 1).map(|k| Root::diff(j, k)).collect())
            } else {
                Ok((n - j + 1..=i - 1).map(|k| Root::diff(k, i)).collect())
            }
        }
        (LieType::C, Root::Diff { i, j }) => {
            let mut out: Vec<Root> = (i..=j - 1).map(|k| Root::sum(k, j)).collect();
            for l in j + 1..=n {
                out.push(Root::diff(j, l));
                out.push(Root::sum(j, l));
            }
            out.push(Root::long(j));
            Ok(out)
        }
        (LieType::C, Root::Sum { i, j }) => {
            Ok((i..=j - 1).map(|k| Root::diff(k, j)).collect())
        }
        _ => Err(Error::TypeNotSupported { expected: "A, C" }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uea::LinearForm;

    fn nil(kind: LieType, rank: u32) -> Nilradical {
        Nilradical::new(RootSystem::new(kind, rank).unwrap()).unwrap()
    }

    #[test]
    fn delta_one_is_highest_root() {
        let a3 = nil(LieType::A, 4);
        assert_eq!(
            delta(&a3, 1).unwrap(),
            a3.generator(Root::diff(1, 4)).unwrap()
        );
    }

    #[test]
    fn delta_two_a3() {
        // Δ₂ = e_{e1-e3} e_{e2-e4} − e_{e1-e4} e_{e2-e3}.
        let a3 = nil(LieType::A, 4);
        let d2 = delta(&a3, 2).unwrap();
        let idx = |r| a3.root_index(r).unwrap();
        let mut w1 = vec![idx(Root::diff(1, 3)), idx(Root::diff(2, 4))];
        w1.sort_unstable();
        let mut w2 = vec![idx(Root::diff(1, 4)), idx(Root::diff(2, 3))];
        w2.sort_unstable();
        assert_eq!(d2.coeff(&w1), Scalar::one());
        assert_eq!(d2.coeff(&w2), -&Scalar::one());
        assert_eq!(d2.num_terms(), 2);
    }

    #[test]
    fn delta_two_c2_layout() {
        // det [[e_{e1+e2}, 2e_{2e1}], [2e_{2e2}, e_{e1+e2}]].
        let c2 = nil(LieType::C, 2);
        let d2 = delta(&c2, 2).unwrap();
        let idx = |r| c2.root_index(r).unwrap();
        let sq = vec![idx(Root::sum(1, 2)), idx(Root::sum(1, 2))];
        let mut cross = vec![idx(Root::long(1)), idx(Root::long(2))];
        cross.sort_unstable();
        assert_eq!(d2.coeff(&sq), Scalar::one());
        assert_eq!(d2.coeff(&cross), Scalar::from_int(-4));
        assert_eq!(d2.num_terms(), 2);
    }

    #[test]
    fn pfaffian_examples() {
        let d2 = nil(LieType::D, 2);
        assert_eq!(
            pfaffian_generator(&d2, 2).unwrap(),
            d2.generator(Root::sum(1, 2)).unwrap()
        );

        let b4 = nil(LieType::B, 4);
        assert_eq!(
            pfaffian_generator(&b4, 2).unwrap(),
            b4.generator(Root::sum(1, 2)).unwrap()
        );

        // 4×4 Pfaffian: three matchings with alternating signs.
        let d4 = nil(LieType::D, 4);
        let p4 = pfaffian_symbol_gen(&d4, 4).unwrap();
        let idx = |r| d4.root_index(r).unwrap();
        let term = |a: Root, b: Root| {
            let mut w = vec![idx(a), idx(b)];
            w.sort_unstable();
            w
        };
        assert_eq!(
            p4.coeff(&term(Root::sum(1, 2), Root::sum(3, 4))),
            Scalar::one()
        );
        assert_eq!(
            p4.coeff(&term(Root::sum(1, 3), Root::sum(2, 4))),
            -&Scalar::one()
        );
        assert_eq!(
            p4.coeff(&term(Root::sum(1, 4), Root::sum(2, 3))),
            Scalar::one()
        );
        assert_eq!(p4.num_terms(), 3);
    }

    #[test]
    fn pfaffian_square_matches_determinant() {
        // The square of the 4×4 Pfaffian equals ± the determinant of the
        // column-reversed skew matrix.
        let d4 = nil(LieType::D, 4);
        let pf = pfaffian_symbol_gen(&d4, 4).unwrap();
        let sq = pf.mul(&pf);
        let i = 4u32;
        let entry = |r: usize, c: usize| -> Entry {
            let (a, b) = (r as u32 + 1, i - c as u32);
            match a.cmp(&b) {
                std::cmp::Ordering::Less => Some((Root::sum(a, b), Scalar::one())),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some((Root::sum(b, a), -&Scalar::one())),
            }
        };
        let det = det_symbol(&d4, 4, &entry).unwrap();
        assert!(sq == det || sq == det.scale(&-&Scalar::one()));
    }

    #[test]
    fn odd_generator_examples() {
        // Rank-1 B: i = 1 is the bordered top index, so the generator is the
        // prime weight-ε₁ element, not its square.
        let b1 = nil(LieType::B, 1);
        assert!(is_bordered(b1.sys(), 1));
        let (sym, elt) = odd_generator(&b1, 1).unwrap();
        let e1 = b1.root_index(Root::short(1)).unwrap();
        assert_eq!(sym.coeff(&[e1]), Scalar::one());
        assert_eq!(sym.num_terms(), 1);
        assert_eq!(elt, b1.generator(Root::short(1)).unwrap());

        // B₂, i = 1: generic branch with the short-root quarter-square.
        let b2 = nil(LieType::B, 2);
        let (sym, _) = odd_generator(&b2, 1).unwrap();
        let idx2 = |r| b2.root_index(r).unwrap();
        let mut dp = vec![idx2(Root::diff(1, 2)), idx2(Root::sum(1, 2))];
        dp.sort_unstable();
        let s1 = idx2(Root::short(1));
        assert_eq!(sym.coeff(&dp), Scalar::one());
        assert_eq!(sym.coeff(&[s1, s1]), Scalar::from_ratio(1, 4));
        assert_eq!(sym.num_terms(), 2);

        // D₃, i = 1: the full quadratic column.
        let d3 = nil(LieType::D, 3);
        let (sym, _) = odd_generator(&d3, 1).unwrap();
        let idx = |r| d3.root_index(r).unwrap();
        let t = |a: Root, b: Root| {
            let mut w = vec![idx(a), idx(b)];
            w.sort_unstable();
            w
        };
        assert_eq!(
            sym.coeff(&t(Root::diff(1, 2), Root::sum(1, 2))),
            Scalar::one()
        );
        assert_eq!(
            sym.coeff(&t(Root::diff(1, 3), Root::sum(1, 3))),
            Scalar::one()
        );
        assert_eq!(sym.num_terms(), 2);
    }

    #[test]
    fn bordered_d4_first_column() {
        let d4 = nil(LieType::D, 4);
        let (sym, _) = odd_generator(&d4, 3).unwrap();
        let idx = |r| d4.root_index(r).unwrap();
        let t = |a: Root, b: Root| {
            let mut w = vec![idx(a), idx(b)];
            w.sort_unstable();
            w
        };
        // Pf of the bordered skew matrix: the cascade matching carries +1.
        assert_eq!(
            sym.coeff(&t(Root::sum(1, 2), Root::diff(3, 4))),
            Scalar::one()
        );
        assert_eq!(
            sym.coeff(&t(Root::sum(1, 3), Root::diff(2, 4))),
            -&Scalar::one()
        );
        assert_eq!(
            sym.coeff(&t(Root::diff(1, 4), Root::sum(2, 3))),
            Scalar::one()
        );
        assert_eq!(sym.num_terms(), 3);
    }

    #[test]
    fn bordered_b3_normalization() {
        let b3 = nil(LieType::B, 3);
        let (sym, _) = odd_generator(&b3, 3).unwrap();
        let idx = |r| b3.root_index(r).unwrap();
        let mut cascade_matching = vec![idx(Root::sum(1, 2)), idx(Root::short(3))];
        cascade_matching.sort_unstable();
        assert_eq!(sym.coeff(&cascade_matching), Scalar::one());
    }

    #[test]
    fn eq10_style_eval_for_rank_six() {
        // ξ₃ of D₆ on a cascade-supported form gives the squared prefix times
        // the second pair.
        let d6 = nil(LieType::D, 6);
        let sym = odd_symbol(&d6, 3).unwrap();
        let mut f = LinearForm::new();
        let vals = [
            (Root::diff(1, 2), 2),
            (Root::sum(1, 2), 3),
            (Root::diff(3, 4), 5),
            (Root::sum(3, 4), 7),
            (Root::diff(5, 6), 11),
            (Root::sum(5, 6), 13),
        ];
        for (r, v) in vals {
            f.set(r, Scalar::from_int(v));
        }
        assert_eq!(sym.eval(&d6, &f), Scalar::from_int(3 * 3 * 5 * 7));
    }

    #[test]
    fn delta_alpha_level_examples() {
        // Level rule: min(row, n − col + 1).
        let a3 = RootSystem::new(LieType::A, 4).unwrap();
        let lvl = cascade_level(a3, Root::diff(2, 4)).unwrap();
        assert_eq!(lvl.level, 1);
        let alg = Nilradical::new(a3).unwrap();
        assert_eq!(
            delta_minor(&alg, Root::diff(2, 4)).unwrap(),
            alg.generator(Root::diff(2, 4)).unwrap()
        );
        assert_eq!(
            delta_minor(&alg, Root::diff(1, 4)).unwrap(),
            delta(&alg, 1).unwrap()
        );
    }

    #[test]
    fn delta_alpha_a7_picture() {
        // The 3×3 minor on rows {1,2,3}, columns {4,7,8} of the 8×8 layout.
        let a7 = RootSystem::new(LieType::A, 8).unwrap();
        let lvl = cascade_level(a7, Root::diff(3, 4)).unwrap();
        assert_eq!(lvl.level, 3);
        assert_eq!(lvl.rows, vec![1, 2, 3]);
        assert_eq!(lvl.cols, vec![4, 7, 8]);
    }

    #[test]
    fn ladder_set_examples() {
        let a3 = RootSystem::new(LieType::A, 4).unwrap();
        assert_eq!(
            ladder_set(a3, Root::diff(1, 2)).unwrap(),
            vec![Root::diff(2, 3), Root::diff(2, 4)]
        );
        assert_eq!(
            ladder_set(a3, Root::diff(2, 4)).unwrap(),
            vec![Root::diff(1, 2)]
        );
        assert!(ladder_set(a3, Root::diff(1, 4)).is_err());

        let c2 = RootSystem::new(LieType::C, 2).unwrap();
        assert_eq!(
            ladder_set(c2, Root::diff(1, 2)).unwrap(),
            vec![Root::sum(1, 2), Root::long(2)]
        );
    }
}
