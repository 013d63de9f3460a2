//! Characterization checks for losing-score and score lists.
//!
//! Losing lists `A, B` of an `[h-k]`-bipartite hypertournament are exactly
//! the non-decreasing pairs with
//!
//! ```text
//! sum(a_1..a_p) + sum(b_1..b_q) >= C(p,h) C(q,k)   for all 1 <= p <= m, 1 <= q <= n
//! ```
//!
//! with equality at `(m, n)`. Score lists obey the complementary bound
//! [`score_bound`]. The uniform (`k`-hypertournament) versions are the
//! one-sided analogues.
//!
//! Every check first tests the total equality and then scans the full index
//! range, reporting the first failure (lexicographic in `(p, q)`) as a
//! [`Witness`].

use std::fmt;

use crate::binom::{self, ExactCount};
use crate::error::{Error, Result};
use crate::model::{is_non_decreasing, BipartiteParams, ListMode, ScoreListPair, UniformParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessKind {
    InequalityViolation,
    EqualityFailure,
}

impl fmt::Display for WitnessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessKind::InequalityViolation => f.write_str("inequality_violation"),
            WitnessKind::EqualityFailure => f.write_str("equality_failure"),
        }
    }
}

/// The failing instance of a characterization inequality. `q` is `None` for
/// the single-index uniform checks, where `p` plays the role of `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Witness {
    pub p: usize,
    pub q: Option<usize>,
    pub lhs: ExactCount,
    pub rhs: ExactCount,
    pub kind: WitnessKind,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.q {
            Some(q) => write!(f, "{} p={} q={}", self.kind, self.p, q)?,
            None => write!(f, "{} j={}", self.kind, self.p)?,
        }
        write!(f, " lhs={} rhs={}", self.lhs, self.rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub accepted: bool,
    pub witness: Option<Witness>,
    pub warnings: Vec<String>,
}

impl Verdict {
    fn from_witness(witness: Option<Witness>, warnings: Vec<String>) -> Self {
        Verdict {
            accepted: witness.is_none(),
            witness,
            warnings,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => f.write_str("ACCEPT"),
            Some(w) => write!(f, "REJECT {w}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Relation {
    AtLeast,
    AtMost,
}

impl Relation {
    fn holds(self, lhs: ExactCount, rhs: ExactCount) -> bool {
        match self {
            Relation::AtLeast => lhs >= rhs,
            Relation::AtMost => lhs <= rhs,
        }
    }
}

fn prefix_sums(xs: &[u64]) -> Result<Vec<ExactCount>> {
    let mut out = Vec::with_capacity(xs.len() + 1);
    let mut acc = ExactCount::ZERO;
    out.push(acc);
    for &x in xs {
        acc = acc.checked_add(x.into())?;
        out.push(acc);
    }
    Ok(out)
}

/// Sums of the `p` largest entries, `p = 0..=len`.
fn suffix_sums(xs: &[u64]) -> Result<Vec<ExactCount>> {
    let reversed: Vec<u64> = xs.iter().rev().copied().collect();
    prefix_sums(&reversed)
}

fn check_list(name: &str, xs: &[u64], len: usize) -> Result<()> {
    if xs.len() != len {
        return Err(Error::usage(format!(
            "list {name} has length {}, expected {len}",
            xs.len()
        )));
    }
    if !is_non_decreasing(xs) {
        return Err(Error::usage(format!(
            "list {name} = {xs:?} is not non-decreasing"
        )));
    }
    Ok(())
}

/// Checks the total equality at `(m, n)` first, then scans the inequalities
/// over `(p, q)` in lexicographic order.
fn scan_pairs(
    sa: &[ExactCount],
    sb: &[ExactCount],
    relation: Relation,
    mut rhs: impl FnMut(usize, usize) -> Result<ExactCount>,
) -> Result<Option<Witness>> {
    let (m, n) = (sa.len() - 1, sb.len() - 1);
    let witness = |p, q, lhs, rhs, kind| Witness {
        p,
        q: Some(q),
        lhs,
        rhs,
        kind,
    };
    let (lhs, total) = (sa[m].checked_add(sb[n])?, rhs(m, n)?);
    if lhs != total {
        return Ok(Some(witness(
            m,
            n,
            lhs,
            total,
            WitnessKind::EqualityFailure,
        )));
    }
    for (p, &ap) in sa.iter().enumerate().skip(1) {
        for (q, &bq) in sb.iter().enumerate().skip(1) {
            if (p, q) == (m, n) {
                continue;
            }
            let lhs = ap.checked_add(bq)?;
            let rhs = rhs(p, q)?;
            if !relation.holds(lhs, rhs) {
                return Ok(Some(witness(
                    p,
                    q,
                    lhs,
                    rhs,
                    WitnessKind::InequalityViolation,
                )));
            }
        }
    }
    Ok(None)
}

fn scan_single(
    s: &[ExactCount],
    mut rhs: impl FnMut(usize) -> Result<ExactCount>,
) -> Result<Option<Witness>> {
    let n = s.len() - 1;
    let witness = |j, lhs, rhs, kind| Witness {
        p: j,
        q: None,
        lhs,
        rhs,
        kind,
    };
    let total = rhs(n)?;
    if s[n] != total {
        return Ok(Some(witness(n, s[n], total, WitnessKind::EqualityFailure)));
    }
    for (j, &sj) in s.iter().enumerate().take(n).skip(1) {
        let bound = rhs(j)?;
        if sj < bound {
            return Ok(Some(witness(
                j,
                s[j],
                bound,
                WitnessKind::InequalityViolation,
            )));
        }
    }
    Ok(None)
}

fn choose(p: usize, q: usize) -> Result<ExactCount> {
    binom::choose(p as u64, q as u64)
}

/// Right-hand side of the losing-list inequality: `C(p,h) C(q,k)`.
pub fn losing_bound(params: BipartiteParams, p: usize, q: usize) -> Result<ExactCount> {
    choose(p, params.h)?.checked_mul(choose(q, params.k)?)
}

/// Right-hand side of the score-list inequality:
/// `p C(m-1,h-1) C(n,k) + q C(m,h) C(n-1,k-1) + C(m-p,h) C(n-q,k) - C(m,h) C(n,k)`.
///
/// This is never negative: the first two terms count incidences between the
/// chosen vertices and arcs, which is at least the number of arcs meeting
/// them, `C(m,h) C(n,k) - C(m-p,h) C(n-q,k)`.
pub fn score_bound(params: BipartiteParams, p: usize, q: usize) -> Result<ExactCount> {
    let BipartiteParams { m, n, h, k } = params;
    let positive = ExactCount::new(p as u64)
        .checked_mul(params.u_incidence()?)?
        .checked_add(ExactCount::new(q as u64).checked_mul(params.v_incidence()?)?)?
        .checked_add(choose(m - p, h)?.checked_mul(choose(n - q, k)?)?)?;
    positive.checked_sub(params.arc_count()?)
}

/// Upper bound on the `p` largest `a`'s plus the `q` largest `b`'s:
/// `C(m,h) C(n,k) - C(m-p,h) C(n-q,k)`.
pub fn corollary_bound(params: BipartiteParams, p: usize, q: usize) -> Result<ExactCount> {
    let BipartiteParams { m, n, h, k } = params;
    params
        .arc_count()?
        .checked_sub(choose(m - p, h)?.checked_mul(choose(n - q, k)?)?)
}

/// `C(j, k)`.
pub fn losing_bound_k(params: UniformParams, j: usize) -> Result<ExactCount> {
    choose(j, params.k)
}

/// `j C(n-1,k-1) + C(n-j,k) - C(n,k)`.
pub fn score_bound_k(params: UniformParams, j: usize) -> Result<ExactCount> {
    let UniformParams { n, k } = params;
    ExactCount::new(j as u64)
        .checked_mul(params.incidence()?)?
        .checked_add(choose(n - j, k)?)?
        .checked_sub(params.arc_count()?)
}

/// Are `A`, `B` the losing lists of some `[h-k]`-bipartite hypertournament?
pub fn check_losing_lists_bipartite(
    params: BipartiteParams,
    a: &[u64],
    b: &[u64],
) -> Result<Verdict> {
    check_list("A", a, params.m)?;
    check_list("B", b, params.n)?;
    let (sa, sb) = (prefix_sums(a)?, prefix_sums(b)?);
    let hk: Vec<ExactCount> = (0..=params.m)
        .map(|p| choose(p, params.h))
        .collect::<Result<_>>()?;
    let qk: Vec<ExactCount> = (0..=params.n)
        .map(|q| choose(q, params.k))
        .collect::<Result<_>>()?;
    let witness = scan_pairs(&sa, &sb, Relation::AtLeast, |p, q| hk[p].checked_mul(qk[q]))?;
    Ok(Verdict::from_witness(witness, params.hypothesis_warnings()))
}

/// Are `C`, `D` the score lists of some `[h-k]`-bipartite hypertournament?
pub fn check_score_lists_bipartite(
    params: BipartiteParams,
    c: &[u64],
    d: &[u64],
) -> Result<Verdict> {
    check_list("C", c, params.m)?;
    check_list("D", d, params.n)?;
    let (sc, sd) = (prefix_sums(c)?, prefix_sums(d)?);
    let witness = scan_pairs(&sc, &sd, Relation::AtLeast, |p, q| {
        score_bound(params, p, q)
    })?;
    Ok(Verdict::from_witness(witness, params.hypothesis_warnings()))
}

/// The upper-bound form of the losing-list criterion.
///
/// Here `p` and `q` count the *largest* entries of `A` and `B`: the `p`
/// largest `a`'s and `q` largest `b`'s may together lose at most the arcs
/// that meet them. Together with the total equality at `(m, n)` this is
/// equivalent to [`check_losing_lists_bipartite`].
pub fn check_corollary_bound(params: BipartiteParams, a: &[u64], b: &[u64]) -> Result<Verdict> {
    check_list("A", a, params.m)?;
    check_list("B", b, params.n)?;
    let (sa, sb) = (suffix_sums(a)?, suffix_sums(b)?);
    let witness = scan_pairs(&sa, &sb, Relation::AtMost, |p, q| {
        corollary_bound(params, p, q)
    })?;
    Ok(Verdict::from_witness(witness, params.hypothesis_warnings()))
}

/// Is `R` the losing score sequence of some `k`-hypertournament?
pub fn check_losing_seq_k(params: UniformParams, r: &[u64]) -> Result<Verdict> {
    check_list("R", r, params.n)?;
    let s = prefix_sums(r)?;
    let witness = scan_single(&s, |j| losing_bound_k(params, j))?;
    Ok(Verdict::from_witness(witness, params.hypothesis_warnings()))
}

/// Is `S` the score sequence of some `k`-hypertournament?
pub fn check_score_seq_k(params: UniformParams, s: &[u64]) -> Result<Verdict> {
    check_list("S", s, params.n)?;
    let sums = prefix_sums(s)?;
    let witness = scan_single(&sums, |j| score_bound_k(params, j))?;
    Ok(Verdict::from_witness(witness, params.hypothesis_warnings()))
}

fn complement(name: &str, xs: &[u64], incidence: ExactCount) -> Result<Vec<u64>> {
    xs.iter()
        .rev()
        .map(|&x| {
            incidence.get().checked_sub(x).ok_or_else(|| {
                Error::usage(format!(
                    "entry {x} of {name} exceeds the per-vertex incidence {incidence}"
                ))
            })
        })
        .collect()
}

/// Maps losing lists to score lists and back: `c_i = I_U - a_{m+1-i}`,
/// `d_j = I_V - b_{n+1-j}` with `I_U = C(m-1,h-1) C(n,k)` and
/// `I_V = C(m,h) C(n-1,k-1)`.
pub fn dual_bipartite(params: BipartiteParams, lists: &ScoreListPair) -> Result<ScoreListPair> {
    check_list("first", lists.a(), params.m)?;
    check_list("second", lists.b(), params.n)?;
    let a = complement("the U-side list", lists.a(), params.u_incidence()?)?;
    let b = complement("the V-side list", lists.b(), params.v_incidence()?)?;
    ScoreListPair::new(a, b, lists.mode().flipped())
}

/// `s_i = C(n-1,k-1) - r_{n+1-i}`; an involution between losing score
/// sequences and score sequences.
pub fn dual_k(params: UniformParams, seq: &[u64]) -> Result<Vec<u64>> {
    check_list("sequence", seq, params.n)?;
    complement("the sequence", seq, params.incidence()?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Totals {
    pub losing_total: ExactCount,
    pub score_total: ExactCount,
}

/// Sum of all losing scores (one per arc) and of all scores (`h + k - 1`
/// per arc).
pub fn totals(params: BipartiteParams) -> Result<Totals> {
    let arcs = params.arc_count()?;
    Ok(Totals {
        losing_total: arcs,
        score_total: ExactCount::new((params.h + params.k - 1) as u64).checked_mul(arcs)?,
    })
}

/// Convenience: the check matching `lists.mode()`.
pub fn check_bipartite(params: BipartiteParams, lists: &ScoreListPair) -> Result<Verdict> {
    match lists.mode() {
        ListMode::Losing => check_losing_lists_bipartite(params, lists.a(), lists.b()),
        ListMode::Score => check_score_lists_bipartite(params, lists.a(), lists.b()),
    }
}
