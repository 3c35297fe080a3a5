//! Linear forms supported on the cascade, the scalars by which the canonical
//! generators act, the evaluation laws for generators on cascade forms,
//! polarizations, and the Weyl-algebra relations of centrally generated
//! quotients.

use crate::cascade::{b_prime, cascade_steps, finite_cascade, truncate, CascadeRoot, OrderSpec};
use crate::error::{Error, Result};
use crate::generators::{delta_minor, delta_symbol, ladder_set, xi_symbol};
use crate::linalg::Matrix;
use crate::rootsys::{weight_root_ratio, LieType, Root, RootSystem};
use crate::scalar::Scalar;
use crate::uea::{LinearForm, Nilradical, UeaElement};
use num::{BigRational, One, Signed};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

/// A map ξ from the finite cascade to scalars, nonzero on the subset that
/// controls central generation. Only types A and C carry the downstream
/// scalar calculus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KostantForm {
    pub sys: RootSystem,
    /// ξ(β_1), …, ξ(β_m) in cascade order.
    pub values: Vec<Scalar>,
}

/// Number of cascade positions that must carry nonzero coefficients.
pub fn prime_positions(sys: RootSystem) -> Result<usize> {
    match sys.kind {
        LieType::A | LieType::C => Ok(b_prime(sys).len()),
        _ => Err(Error::TypeNotSupported { expected: "A, C" }),
    }
}

impl KostantForm {
    pub fn new(sys: RootSystem, values: Vec<Scalar>) -> Result<Self> {
        let m = sys.cascade_size() as usize;
        let mp = prime_positions(sys)?;
        if values.len() != m {
            return Err(Error::IndexOutOfRange {
                what: "Kostant form coefficients",
                index: values.len() as u32,
                max: m as u32,
            });
        }
        for (k, v) in values.iter().take(mp).enumerate() {
            if v.is_zero() {
                return Err(Error::ZeroOnCascade { k: k + 1 });
            }
        }
        Ok(KostantForm { sys, values })
    }

    /// The associated linear form Σ ξ(β) e_β*.
    pub fn linear_form(&self) -> LinearForm {
        let mut f = LinearForm::new();
        for (beta, v) in finite_cascade(self.sys).into_iter().zip(&self.values) {
            f.set(beta, v.clone());
        }
        f
    }
}

/// The sequence of scalars by which Δ_1, …, Δ_m act, with c_0 = 1 prepended.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScalarSequence {
    pub c: Vec<Scalar>,
}

impl ScalarSequence {
    pub fn new(mut c: Vec<Scalar>) -> Self {
        c.insert(0, Scalar::one());
        ScalarSequence { c }
    }

    /// c_k, with c_0 = 1.
    pub fn get(&self, k: usize) -> &Scalar {
        &self.c[k]
    }

    pub fn len(&self) -> usize {
        self.c.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// The scalar by which Δ_k evaluates on the all-ones cascade form: the
/// cascade antidiagonal coefficient s_k. Derived by direct evaluation, never
/// assumed; callers report it next to the alternating-sign convention so any
/// mismatch stays visible.
pub fn antidiagonal_scalars(alg: &Nilradical) -> Result<Vec<Scalar>> {
    let sys = alg.sys();
    let ones = KostantForm::new(sys, vec![Scalar::one(); sys.cascade_size() as usize])?;
    let f = ones.linear_form();
    (1..=sys.cascade_size())
        .map(|k| Ok(delta_symbol(alg, k)?.eval(alg, &f)))
        .collect()
}

/// Evaluate the generator symbols on f_ξ: c_k = ξ_k(f_ξ).
pub fn c_scalars(alg: &Nilradical, xi: &KostantForm) -> Result<ScalarSequence> {
    if xi.sys != alg.sys() {
        return Err(Error::MixedSystems);
    }
    let f = xi.linear_form();
    let c: Vec<Scalar> = (1..=alg.sys().cascade_size())
        .map(|k| Ok(delta_symbol(alg, k)?.eval(alg, &f)))
        .collect::<Result<_>>()?;
    Ok(ScalarSequence::new(c))
}

/// Invert [`c_scalars`]: recover ξ(β_k) from consecutive quotients, using
/// the derived antidiagonal scalars so the roundtrip is exact. Scalars up to
/// the prime-position count must be nonzero.
pub fn reconstruct_xi(alg: &Nilradical, c: &ScalarSequence) -> Result<KostantForm> {
    let sys = alg.sys();
    let m = sys.cascade_size() as usize;
    let mp = prime_positions(sys)?;
    if c.len() < m {
        return Err(Error::IndexOutOfRange {
            what: "scalar sequence",
            index: c.len() as u32,
            max: m as u32,
        });
    }
    for k in 1..=mp {
        if c.get(k).is_zero() {
            return Err(Error::ZeroScalar { k });
        }
    }
    let s = antidiagonal_scalars(alg)?;
    let mut values = Vec::with_capacity(m);
    for k in 1..=m {
        let s_prev = if k == 1 {
            Scalar::one()
        } else {
            s[k - 2].clone()
        };
        if c.get(k - 1).is_zero() {
            return Err(Error::ZeroScalar { k: k - 1 });
        }
        let v = &(&s_prev / &s[k - 1]) * &(c.get(k) / c.get(k - 1));
        values.push(v);
    }
    KostantForm::new(sys, values)
}

fn integer_of(r: &BigRational) -> Option<i64> {
    if r.denom().is_one() {
        i64::try_from(r.numer().clone()).ok()
    } else {
        None
    }
}

/// Validate that a form is supported on the cascade with nonzero entries and
/// return the cascade coefficients in index order.
fn cascade_coefficients(sys: RootSystem, t: &LinearForm) -> Result<Vec<Scalar>> {
    let cascade = finite_cascade(sys);
    let set: BTreeSet<Root> = cascade.iter().copied().collect();
    for root in t.support.keys() {
        if !set.contains(root) {
            return Err(Error::BadCascadeForm);
        }
    }
    let vals: Vec<Scalar> = cascade.iter().map(|b| t.value(*b)).collect();
    if vals.iter().any(|v| v.is_zero()) {
        return Err(Error::BadCascadeForm);
    }
    Ok(vals)
}

#[derive(Clone, Debug, Serialize)]
pub struct ProductFormula {
    pub value: Scalar,
    /// Exponent of each cascade coefficient, in cascade order.
    pub exponents: Vec<u32>,
}

/// The monomial law for generator values on cascade-supported forms: the
/// product of cascade coefficients with exponents (μ_i, β)/(β, β).
pub fn eval_product_formula(alg: &Nilradical, i: u32, t: &LinearForm) -> Result<ProductFormula> {
    let sys = alg.sys();
    let coeffs = cascade_coefficients(sys, t)?;
    let mu = sys.generator_weight(i)?;
    let mut exponents = Vec::new();
    for beta in finite_cascade(sys) {
        let r = weight_root_ratio(&mu, beta);
        match integer_of(&r) {
            Some(e) if !r.is_negative() => exponents.push(e as u32),
            _ => return Err(Error::NonIntegerExponent { beta }),
        }
    }
    let mut value = Scalar::one();
    for (v, e) in coeffs.iter().zip(&exponents) {
        value *= &v.pow(*e);
    }
    Ok(ProductFormula { value, exponents })
}

/// Closed-form value of the s-th odd generator of D_{2·npairs} on a
/// cascade-supported form: squared sum-coefficients of the first s−1 pairs
/// times both coefficients of the s-th pair; the top index instead takes
/// single sum factors and drops its own.
pub fn d_s_eval(npairs: u32, s: u32, t: &LinearForm) -> Result<Scalar> {
    if s == 0 || s > npairs {
        return Err(Error::IndexOutOfRange {
            what: "odd generator",
            index: s,
            max: npairs,
        });
    }
    let sys = RootSystem::new(LieType::D, 2 * npairs)?;
    let coeffs = cascade_coefficients(sys, t)?;
    // Cascade order per pair: difference root then sum root.
    let diff = |k: u32| coeffs[2 * k as usize - 2].clone();
    let sum = |k: u32| coeffs[2 * k as usize - 1].clone();
    if s < npairs {
        let mut out = Scalar::one();
        for u in 1..s {
            out *= &sum(u).pow(2);
        }
        out *= &diff(s);
        out *= &sum(s);
        Ok(out)
    } else {
        let mut out = Scalar::one();
        for u in 1..npairs {
            out *= &sum(u);
        }
        out *= &diff(npairs);
        Ok(out)
    }
}

/// Roots spanning the standard polarization used for induced modules:
/// columns up to the antidiagonal for type A, negative columns for type C.
pub fn polarization_roots(sys: RootSystem) -> Result<Vec<Root>> {
    let n = sys.rank;
    match sys.kind {
        LieType::A => Ok(sys
            .positive_roots()
            .into_iter()
            .filter(|r| r.col() as u32 <= n - r.row() + 1)
            .collect()),
        LieType::C => Ok(sys
            .positive_roots()
            .into_iter()
            .filter(|r| r.col() < 0)
            .collect()),
        _ => Err(Error::TypeNotSupported { expected: "A, C" }),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PolarizationReport {
    pub subalgebra: bool,
    pub isotropic: bool,
    pub gram_rank: usize,
    pub dim_nilradical: usize,
    pub dim_span: usize,
    pub maximal: bool,
}

impl PolarizationReport {
    pub fn pass(&self) -> bool {
        self.subalgebra && self.isotropic && self.maximal
    }
}

/// Check the three polarization clauses for a root subset P and a form f:
/// span(P) is a subalgebra, the skew form f([·,·]) vanishes on it, and its
/// dimension equals dim n − rank/2.
pub fn check_polarization(
    alg: &Nilradical,
    roots: &[Root],
    f: &LinearForm,
) -> Result<PolarizationReport> {
    let idx: Vec<u32> = roots
        .iter()
        .map(|r| alg.root_index(*r))
        .collect::<Result<_>>()?;
    let set: BTreeSet<u32> = idx.iter().copied().collect();
    let mut subalgebra = true;
    let mut isotropic = true;
    for (p, &a) in idx.iter().enumerate() {
        for &b in idx.iter().skip(p + 1) {
            if let Some((c, s)) = alg.bracket(a, b) {
                if !set.contains(c) {
                    subalgebra = false;
                }
                if !(&f.value(alg.roots()[*c as usize]) * s).is_zero() {
                    isotropic = false;
                }
            }
        }
    }
    let dim = alg.dim();
    let mut gram = Matrix::zero(dim, dim);
    for a in 0..dim as u32 {
        for b in 0..dim as u32 {
            if let Some((c, s)) = alg.bracket(a, b) {
                gram.set(
                    a as usize,
                    b as usize,
                    &f.value(alg.roots()[*c as usize]) * s,
                );
            }
        }
    }
    let gram_rank = gram.rank();
    let dim_span = set.len();
    let maximal = dim_span == dim - gram_rank / 2;
    Ok(PolarizationReport {
        subalgebra,
        isotropic,
        gram_rank,
        dim_nilradical: dim,
        dim_span,
        maximal,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct WeylPair {
    pub p_root: Root,
    pub q_root: Root,
    pub level: u32,
    /// Sign s with [Δ_p, Δ_q] = s·Δ_level·Δ_{level−1}, derived exactly.
    pub observed_sign: i8,
    /// Whether the observed sign equals (−1)^{level+1}.
    pub matches_alternating: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct WeylReport {
    pub pairs: Vec<WeylPair>,
    pub expected_count: usize,
    /// Commutators [p, q'] for unmatched pairs, [p, p'] and [q, q'] all
    /// vanish exactly in U(n).
    pub off_diagonal_zero: bool,
    pub failures: Vec<String>,
}

impl WeylReport {
    pub fn pass(&self) -> bool {
        self.pairs.len() == self.expected_count
            && self.off_diagonal_zero
            && self.failures.is_empty()
    }
}

/// The Weyl-algebra generator pairs of the centrally generated quotient:
/// each minor Δ_α on the upper side pairs with its unique non-commuting
/// partner minor, and the pair count matches the closed-form count. All
/// relations are verified through exact identities in U(n) plus scalar
/// arithmetic on the c_k; no quotient structure is ever materialized.
pub fn weyl_pairs(alg: &Nilradical, c: &ScalarSequence) -> Result<WeylReport> {
    let sys = alg.sys();
    let n = sys.rank;
    let mut plan: Vec<(Root, Root, u32)> = Vec::new();
    let expected_count;
    match sys.kind {
        LieType::A => {
            for i in 1..=n {
                for j in i + 1..=n {
                    if i + j <= n {
                        plan.push((Root::diff(i, j), Root::diff(j, n - i + 1), i));
                    }
                }
            }
            expected_count = {
                let mut total = 0usize;
                let mut step = n as i64 - 2;
                while step > 0 {
                    total += step as usize;
                    step -= 2;
                }
                total
            };
        }
        LieType::C => {
            for i in 1..=n {
                for j in i + 1..=n {
                    plan.push((Root::diff(i, j), Root::sum(i, j), i));
                }
            }
            expected_count = plan.len();
        }
        _ => return Err(Error::TypeNotSupported { expected: "A, C" }),
    }
    for (_, _, level) in &plan {
        if c.get(*level as usize).is_zero()
            || (*level >= 2 && c.get(*level as usize - 1).is_zero())
        {
            return Err(Error::ZeroScalar {
                k: *level as usize,
            });
        }
    }

    let cascade = finite_cascade(sys);
    let mut failures = Vec::new();
    let mut pairs = Vec::new();
    let minors: Vec<(UeaElement, UeaElement)> = plan
        .iter()
        .map(|(p, q, _)| Ok((delta_minor(alg, *p)?, delta_minor(alg, *q)?)))
        .collect::<Result<_>>()?;
    for ((p_root, q_root, level), (p_elt, q_elt)) in plan.iter().zip(&minors) {
        let comm = alg.commutator(p_elt, q_elt)?;
        let head = delta_minor(alg, cascade[*level as usize - 1])?;
        let tail = if *level >= 2 {
            delta_minor(alg, cascade[*level as usize - 2])?
        } else {
            alg.one()
        };
        let prod = alg.mul(&head, &tail)?;
        let observed_sign = if comm == prod {
            1i8
        } else if comm == prod.scale(&-&Scalar::one()) {
            -1i8
        } else {
            failures.push(format!(
                "[D({p_root}), D({q_root})] is not ±(level {level} product)"
            ));
            continue;
        };
        let alternating = if level % 2 == 1 { 1 } else { -1 };
        pairs.push(WeylPair {
            p_root: *p_root,
            q_root: *q_root,
            level: *level,
            observed_sign,
            matches_alternating: observed_sign == alternating,
        });
    }

    // Off-diagonal relations: distinct pairs commute in every combination.
    let mut off_diagonal_zero = true;
    for (a, (pa, qa)) in minors.iter().enumerate() {
        for (b, (pb, qb)) in minors.iter().enumerate() {
            if a == b {
                continue;
            }
            if !alg.commutator(pa, pb)?.is_zero()
                || !alg.commutator(qa, qb)?.is_zero()
                || !alg.commutator(pa, qb)?.is_zero()
            {
                off_diagonal_zero = false;
                failures.push(format!(
                    "pairs at {} and {} fail an off-diagonal relation",
                    plan[a].0, plan[b].0
                ));
            }
        }
    }

    Ok(WeylReport {
        pairs,
        expected_count,
        off_diagonal_zero,
        failures,
    })
}

/// Commutator shape of the ladder action on minors: [Δ_α, e_γ] must be zero
/// or ±Δ_{α+γ}. Returns the target root and sign, or `None` for zero.
pub fn minor_ladder_commutator(
    alg: &Nilradical,
    alpha: Root,
    gamma: Root,
) -> Result<Option<(Root, i8)>> {
    let sys = alg.sys();
    let d = delta_minor(alg, alpha)?;
    let e = alg.generator(gamma)?;
    let comm = alg.commutator(&d, &e)?;
    if comm.is_zero() {
        return Ok(None);
    }
    let target = sys.add_roots(alpha, gamma).ok_or(Error::ResidualNonZero)?;
    let expect = delta_minor(alg, target)?;
    if comm == expect {
        Ok(Some((target, 1)))
    } else if comm == expect.scale(&-&Scalar::one()) {
        Ok(Some((target, -1)))
    } else {
        Err(Error::ResidualNonZero)
    }
}

/// Labelled symbol of a truncated generator: the q-th determinant generator
/// (A/C) or q-th Pfaffian generator (B/D) of the subsystem on the index set
/// M, with every root written in ϑ-labels. Stability of the generators under
/// enlarging M is equality of these maps.
pub fn truncated_generator_symbol(
    kind: LieType,
    order: &OrderSpec,
    m_set: &BTreeSet<u32>,
    q: u32,
) -> Result<BTreeMap<Vec<CascadeRoot>, Scalar>> {
    let trunc = truncate(kind, order, m_set)?;
    let alg = Nilradical::new(trunc.sys)?;
    let xi_index = match kind {
        LieType::A | LieType::C => q,
        LieType::B | LieType::D => 2 * q,
    };
    let sym = xi_symbol(&alg, xi_index)?;
    let roots = alg.roots();
    let mut out: BTreeMap<Vec<CascadeRoot>, Scalar> = BTreeMap::new();
    for (word, coeff) in sym.terms() {
        let mut labelled: Vec<CascadeRoot> = word
            .iter()
            .map(|&idx| trunc.map_root(roots[idx as usize]))
            .collect();
        labelled.sort();
        let entry = out.entry(labelled).or_insert_with(Scalar::zero);
        *entry += coeff;
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

/// Evaluate a labelled symbol on the infinite-cascade form that assigns
/// `xi[k-1]` to the k-th cascade root of the given order and zero elsewhere.
pub fn eval_labelled_on_cascade(
    kind: LieType,
    order: &OrderSpec,
    symbol: &BTreeMap<Vec<CascadeRoot>, Scalar>,
    xi: &[Scalar],
) -> Result<Scalar> {
    let cas = cascade_steps(kind, order, xi.len() as u32)?;
    let mut values: BTreeMap<CascadeRoot, Scalar> = BTreeMap::new();
    for (step, v) in cas.steps.iter().zip(xi) {
        values.insert(step.beta, v.clone());
    }
    let mut acc = Scalar::zero();
    for (word, coeff) in symbol {
        let mut term = coeff.clone();
        for root in word {
            match values.get(root) {
                Some(v) => term *= v,
                None => {
                    term = Scalar::zero();
                    break;
                }
            }
        }
        acc += &term;
    }
    Ok(acc)
}

/// Ladder-set wrapper re-exported next to the commutator check.
pub fn ladder_roots(sys: RootSystem, alpha: Root) -> Result<Vec<Root>> {
    ladder_set(sys, alpha)
}
