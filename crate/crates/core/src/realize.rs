//! Explicit realization of losing-score lists.
//!
//! [`realize_inductive`] follows the constructive induction on `m`:
//!
//! * **Case 1**, `a_m = C(m-1,h-1) C(n,k)`: realize `[a_1..a_{m-1}], B` on
//!   `(m-1) x n`, then add `u_m` and make it lose every arc that contains it.
//! * **Case 2**, `a_m` below that cap: shift units onto `a_m` with
//!   [`lemma23_step`] until Case 1 applies, realize, and walk each shift back
//!   with the arc exchange [`lemma22_swap`].
//! * `m = h`: exchange the roles of `U` and `V` and induct on `n`; `m = h,
//!   n = k` is a single arc whose loser is forced.
//!
//! Vertex `u_i` always receives losing score `a_i` (and `v_j` receives
//! `b_j`). Whenever a step's precondition fails on a concrete instance the
//! realizer solves that sub-instance with the max-flow realizer instead and
//! records a [`TraceStep::FlowFallback`].
//!
//! [`realize_flow`] is the independent route: one loser per support subject
//! to per-vertex quotas, as a max-flow problem.

use std::fmt;

use crate::budget::Budget;
use crate::criteria::{check_losing_lists_bipartite, check_losing_seq_k};
use crate::error::{Error, Result};
use crate::flow::{assign_losers, Assignment};
use crate::model::{
    swap_entries, Arc, BipartiteHypertournament, BipartiteParams, KHypertournament, Side,
    UniformParams, VertexRef,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Inductive,
    Flow,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Inductive => f.write_str("inductive"),
            Method::Flow => f.write_str("flow"),
        }
    }
}

/// How [`lemma22_swap`] moved one unit of losing score.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SwapForm {
    /// One arc containing both vertices had `j` last; `i` and `j` were
    /// interchanged in it.
    SingleArc,
    /// Two arcs whose supports differ only in `i` versus `j` were re-ordered.
    ArcPair,
}

/// One step of an inductive realization. Vertices are named in the frame of
/// the final hypertournament.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceStep {
    BaseCase {
        loser: VertexRef,
    },
    /// Induction continues on the other side.
    RoleSwap {
        side: Side,
    },
    /// One unit moved from `from` to `to` on the induction side.
    Lemma23Step {
        from: VertexRef,
        to: VertexRef,
    },
    /// `vertex` added as the loser of every arc containing it.
    Case1Extension {
        vertex: VertexRef,
        arcs: u64,
    },
    Lemma22Swap {
        i: VertexRef,
        j: VertexRef,
        form: SwapForm,
    },
    FlowFallback {
        params: BipartiteParams,
        reason: String,
    },
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceStep::BaseCase { loser } => write!(f, "base_case loser={loser}"),
            TraceStep::RoleSwap { side } => write!(f, "role_swap induct_on={side}"),
            TraceStep::Lemma23Step { from, to } => write!(f, "lemma23_step {from}->{to}"),
            TraceStep::Case1Extension { vertex, arcs } => {
                write!(f, "case1_extension vertex={vertex} arcs={arcs}")
            }
            TraceStep::Lemma22Swap { i, j, form } => {
                let form = match form {
                    SwapForm::SingleArc => "single_arc",
                    SwapForm::ArcPair => "arc_pair",
                };
                write!(f, "lemma22_swap i={i} j={j} form={form}")
            }
            TraceStep::FlowFallback { params, reason } => {
                write!(f, "flow_fallback params=({params}) reason={reason}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizationResult {
    pub hypertournament: BipartiteHypertournament,
    pub method: Method,
    pub trace: Vec<TraceStep>,
}

impl RealizationResult {
    /// Number of sub-instances the inductive realizer handed to the flow
    /// realizer.
    pub fn fallbacks(&self) -> usize {
        self.trace
            .iter()
            .filter(|s| matches!(s, TraceStep::FlowFallback { .. }))
            .count()
    }
}

/// Result of one [`lemma23_step`]: `a` with `a_r` lowered and `a_m` raised
/// by one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma23Outcome {
    pub a: Vec<u64>,
    /// 1-based index of the lowered entry.
    pub r: usize,
}

/// Moves one unit from the start of the run ending at `a_{m-1}` onto `a_m`.
///
/// `r` is the largest index with `a_{r-1} < a_r = ... = a_{m-1}` (reading
/// `a_0` as 0). Fails with [`Error::NotApplicable`] when `a_m` is already at
/// its cap `C(m-1,h-1) C(n,k)` or when no such `r` exists, which happens
/// exactly when `a_1 = ... = a_{m-1} = 0`.
pub fn lemma23_step(params: BipartiteParams, a: &[u64], b: &[u64]) -> Result<Lemma23Outcome> {
    let verdict = check_losing_lists_bipartite(params, a, b)?;
    if !verdict.accepted {
        return Err(Error::usage(format!(
            "lists do not satisfy the losing-list inequalities: {verdict}"
        )));
    }
    let m = params.m;
    let cap = params.u_incidence()?.get();
    if a[m - 1] >= cap {
        return Err(Error::NotApplicable(format!(
            "a_{m} = {} is already at its cap {cap}",
            a[m - 1]
        )));
    }
    if m < 2 || a[m - 2] == 0 {
        return Err(Error::NotApplicable(format!(
            "a_1..a_{} are all zero, no entry can be lowered",
            m - 1
        )));
    }
    let run_value = a[m - 2];
    let r = a[..m - 1]
        .iter()
        .position(|&x| x == run_value)
        .expect("run value occurs")
        + 1;
    let mut out = a.to_vec();
    out[r - 1] -= 1;
    out[m - 1] += 1;
    let verdict = check_losing_lists_bipartite(params, &out, b)?;
    if !verdict.accepted {
        return Err(Error::internal(format!(
            "shifted list {out:?} violates the losing-list inequalities: {verdict}"
        )));
    }
    Ok(Lemma23Outcome { a: out, r })
}

fn same_side_pair(h: &BipartiteHypertournament, i: VertexRef, j: VertexRef) -> Result<()> {
    let params = h.params();
    let side = match (i.side, j.side) {
        (Some(a), Some(b)) if a == b => a,
        _ => {
            return Err(Error::usage(format!(
                "{i} and {j} must lie on the same side"
            )))
        }
    };
    let len = params.side_len(side);
    if i == j || !(1..=len).contains(&i.index) || !(1..=len).contains(&j.index) {
        return Err(Error::usage(format!(
            "need two distinct vertices of {} within 1..={len}, got {i} and {j}",
            side.to_string().to_uppercase()
        )));
    }
    Ok(())
}

/// Arc exchange raising the losing score of `i` by one and lowering that of
/// `j` by one, leaving every other vertex and every arc support unchanged.
///
/// Requires `losing(i) < losing(j)`. The first arc (in support order) that
/// contains both with `j` last has `i` and `j` interchanged. Failing that,
/// the first arc `e1` containing `i` (not last) but not `j` is paired with
/// the arc `e2` on `support(e1) - i + j`; if `e2` ends in `j`, `i` is
/// interchanged with `e1`'s last vertex `t` in `e1` and `j` with `t` in `e2`.
pub fn lemma22_swap(
    h: &BipartiteHypertournament,
    i: VertexRef,
    j: VertexRef,
) -> Result<(BipartiteHypertournament, SwapForm)> {
    same_side_pair(h, i, j)?;
    h.check()?;
    let losing = h.raw_losing();
    if losing.get(i) >= losing.get(j) {
        return Err(Error::usage(format!(
            "need losing({i}) < losing({j}), have {} and {}",
            losing.get(i),
            losing.get(j)
        )));
    }
    swap_unchecked(h, i, j)
}

fn swap_unchecked(
    h: &BipartiteHypertournament,
    i: VertexRef,
    j: VertexRef,
) -> Result<(BipartiteHypertournament, SwapForm)> {
    let arcs = h.arcs();
    if let Some(pos) = arcs
        .iter()
        .position(|e| e.loser() == Some(j) && e.contains(i))
    {
        let swapped = swap_entries(&arcs[pos], i, j)?;
        return Ok((h.with_replaced(&[(pos, swapped)]), SwapForm::SingleArc));
    }
    for (pos1, e1) in arcs.iter().enumerate() {
        let Some(t) = e1.loser() else { continue };
        if !e1.contains(i) || t == i || e1.contains(j) {
            continue;
        }
        let mut support2: Vec<VertexRef> = e1
            .entries()
            .iter()
            .copied()
            .filter(|&x| x != i)
            .chain(std::iter::once(j))
            .collect();
        support2.sort_unstable();
        let Some(pos2) = h.position_of_support(&support2) else {
            continue;
        };
        let e2 = &arcs[pos2];
        if e2.loser() != Some(j) {
            continue;
        }
        let new1 = swap_entries(e1, i, t)?;
        let new2 = swap_entries(e2, j, t)?;
        return Ok((
            h.with_replaced(&[(pos1, new1), (pos2, new2)]),
            SwapForm::ArcPair,
        ));
    }
    Err(Error::internal(format!(
        "no arc or arc pair moves a loss from {j} to {i}"
    )))
}

/// Vertex names inside a possibly transposed sub-problem.
#[derive(Debug, Clone, Copy)]
struct Frame {
    transposed: bool,
}

impl Frame {
    fn global(self, x: VertexRef) -> VertexRef {
        if self.transposed {
            x.transposed()
        } else {
            x
        }
    }

    fn flip(self) -> Frame {
        Frame {
            transposed: !self.transposed,
        }
    }
}

struct Inductive<'a> {
    trace: &'a mut Vec<TraceStep>,
}

impl Inductive<'_> {
    fn build(
        &mut self,
        params: BipartiteParams,
        a: &[u64],
        b: &[u64],
        frame: Frame,
    ) -> Result<BipartiteHypertournament> {
        if params.m > params.h {
            return self.reduce_u(params, a, b, frame);
        }
        if params.n > params.k {
            self.trace.push(TraceStep::RoleSwap {
                side: if frame.transposed { Side::U } else { Side::V },
            });
            let inner = self.build(params.transposed(), b, a, frame.flip())?;
            return Ok(inner.transposed());
        }
        // m = h, n = k: one arc, one unit of losing score
        let loser = if a[params.m - 1] == 1 {
            VertexRef::u(params.m)
        } else {
            VertexRef::v(params.n)
        };
        self.trace.push(TraceStep::BaseCase {
            loser: frame.global(loser),
        });
        Ok(BipartiteHypertournament::from_losers(params, |_| loser))
    }

    fn reduce_u(
        &mut self,
        params: BipartiteParams,
        a: &[u64],
        b: &[u64],
        frame: Frame,
    ) -> Result<BipartiteHypertournament> {
        let m = params.m;
        let cap = params.u_incidence()?.get();
        let last = VertexRef::u(m);
        let mut shifted = a.to_vec();
        let mut shifts = Vec::new();
        while shifted[m - 1] < cap {
            match lemma23_step(params, &shifted, b) {
                Ok(step) => {
                    self.trace.push(TraceStep::Lemma23Step {
                        from: frame.global(VertexRef::u(step.r)),
                        to: frame.global(last),
                    });
                    shifts.push(step.r);
                    shifted = step.a;
                }
                Err(e @ (Error::NotApplicable(_) | Error::Internal(_))) => {
                    return self.fallback(params, a, b, frame, e);
                }
                Err(e) => return Err(e),
            }
        }

        let sub_params = BipartiteParams::new(m - 1, params.n, params.h, params.k)?;
        let sub = self.build(sub_params, &shifted[..m - 1], b, frame)?;
        let mut arcs: Vec<Arc> = sub.arcs().to_vec();
        arcs.extend(
            params
                .supports()
                .filter(|s| s.contains(&last))
                .map(|s| Arc::canonical(&s, last)),
        );
        self.trace.push(TraceStep::Case1Extension {
            vertex: frame.global(last),
            arcs: cap,
        });
        let mut h = BipartiteHypertournament::from_arcs_unchecked(params, arcs);

        for &r in shifts.iter().rev() {
            let i = VertexRef::u(r);
            match swap_unchecked(&h, i, last) {
                Ok((next, form)) => {
                    self.trace.push(TraceStep::Lemma22Swap {
                        i: frame.global(i),
                        j: frame.global(last),
                        form,
                    });
                    h = next;
                }
                Err(e @ Error::Internal(_)) => return self.fallback(params, a, b, frame, e),
                Err(e) => return Err(e),
            }
        }
        Ok(h)
    }

    fn fallback(
        &mut self,
        params: BipartiteParams,
        a: &[u64],
        b: &[u64],
        frame: Frame,
        cause: Error,
    ) -> Result<BipartiteHypertournament> {
        let global_params = if frame.transposed {
            params.transposed()
        } else {
            params
        };
        self.trace.push(TraceStep::FlowFallback {
            params: global_params,
            reason: cause.to_string(),
        });
        match flow_bipartite(params, a, b)? {
            FlowOutcome::Feasible(r) => Ok(r.hypertournament),
            FlowOutcome::Infeasible(inf) => Err(Error::internal(format!(
                "sub-instance ({params}) with A={a:?} B={b:?} is infeasible ({inf}) after: {cause}"
            ))),
        }
    }
}

/// Realizes accepted losing lists by the constructive induction.
pub fn realize_inductive(
    params: BipartiteParams,
    a: &[u64],
    b: &[u64],
) -> Result<RealizationResult> {
    realize_inductive_with_budget(params, a, b, &Budget::default())
}

pub fn realize_inductive_with_budget(
    params: BipartiteParams,
    a: &[u64],
    b: &[u64],
    budget: &Budget,
) -> Result<RealizationResult> {
    budget.check_realization("realization", params.arc_count())?;
    let verdict = check_losing_lists_bipartite(params, a, b)?;
    if !verdict.accepted {
        return Err(Error::usage(format!(
            "lists are not losing score lists: {verdict}"
        )));
    }
    let mut trace = Vec::new();
    let h = Inductive { trace: &mut trace }.build(params, a, b, Frame { transposed: false })?;
    let h = h.canonicalized();
    let (per_vertex, _) = crate::model::losing_scores(&h)?;
    if per_vertex.u != a || per_vertex.v != b {
        return Err(Error::internal(format!(
            "inductive realization produced losing scores {per_vertex:?}"
        )));
    }
    Ok(RealizationResult {
        hypertournament: h,
        method: Method::Inductive,
        trace,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Infeasibility {
    /// Largest number of supports that can be given a loser within quota.
    pub max_flow: u64,
    /// Number of supports.
    pub required: u64,
}

impl fmt::Display for Infeasibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "max_flow={} required={}", self.max_flow, self.required)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FlowOutcome {
    Feasible(RealizationResult),
    Infeasible(Infeasibility),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FlowOutcomeK {
    Feasible(KHypertournament),
    Infeasible(Infeasibility),
}

fn quota_lengths(name: &str, xs: &[u64], len: usize) -> Result<()> {
    if xs.len() == len {
        Ok(())
    } else {
        Err(Error::usage(format!(
            "list {name} has length {}, expected {len}",
            xs.len()
        )))
    }
}

/// Realizes per-vertex losing quotas `u_i -> a_i`, `v_j -> b_j` by max-flow.
/// Lists need not be sorted or accepted; infeasible quotas are reported, not
/// raised.
pub fn realize_flow(params: BipartiteParams, a: &[u64], b: &[u64]) -> Result<FlowOutcome> {
    realize_flow_with_budget(params, a, b, &Budget::default())
}

pub fn realize_flow_with_budget(
    params: BipartiteParams,
    a: &[u64],
    b: &[u64],
    budget: &Budget,
) -> Result<FlowOutcome> {
    budget.check_realization("realization", params.arc_count())?;
    flow_bipartite(params, a, b)
}

fn flow_bipartite(params: BipartiteParams, a: &[u64], b: &[u64]) -> Result<FlowOutcome> {
    quota_lengths("A", a, params.m)?;
    quota_lengths("B", b, params.n)?;
    let m = params.m;
    let dense = |x: &VertexRef| match x.side {
        Some(Side::U) => x.index - 1,
        _ => m + x.index - 1,
    };
    let supports: Vec<Vec<VertexRef>> = params.supports().collect();
    let ids: Vec<Vec<usize>> = supports
        .iter()
        .map(|s| s.iter().map(dense).collect())
        .collect();
    let quotas: Vec<u64> = a.iter().chain(b).copied().collect();
    match assign_losers(&ids, &quotas) {
        Assignment::Feasible(losers) => {
            let arcs = supports
                .iter()
                .zip(&losers)
                .map(|(s, &pos)| Arc::canonical(s, s[pos]))
                .collect();
            let h = BipartiteHypertournament::from_arcs_unchecked(params, arcs);
            Ok(FlowOutcome::Feasible(RealizationResult {
                hypertournament: h,
                method: Method::Flow,
                trace: Vec::new(),
            }))
        }
        Assignment::Infeasible { max_flow, required } => {
            Ok(FlowOutcome::Infeasible(Infeasibility {
                max_flow,
                required,
            }))
        }
    }
}

/// Realizes per-vertex losing quotas of a `k`-hypertournament by max-flow.
pub fn realize_flow_k(params: UniformParams, r: &[u64]) -> Result<FlowOutcomeK> {
    realize_flow_k_with_budget(params, r, &Budget::default())
}

pub fn realize_flow_k_with_budget(
    params: UniformParams,
    r: &[u64],
    budget: &Budget,
) -> Result<FlowOutcomeK> {
    budget.check_realization("realization", params.arc_count())?;
    quota_lengths("R", r, params.n)?;
    let supports: Vec<Vec<VertexRef>> = params.supports().collect();
    let ids: Vec<Vec<usize>> = supports
        .iter()
        .map(|s| s.iter().map(|x| x.index - 1).collect())
        .collect();
    match assign_losers(&ids, r) {
        Assignment::Feasible(losers) => {
            let arcs = supports
                .iter()
                .zip(&losers)
                .map(|(s, &pos)| Arc::canonical(s, s[pos]))
                .collect();
            Ok(FlowOutcomeK::Feasible(
                KHypertournament::from_arcs_unchecked(params, arcs),
            ))
        }
        Assignment::Infeasible { max_flow, required } => {
            Ok(FlowOutcomeK::Infeasible(Infeasibility {
                max_flow,
                required,
            }))
        }
    }
}

/// Checks a `k`-hypertournament sequence and realizes it by max-flow.
pub fn realize_seq_k(params: UniformParams, r: &[u64]) -> Result<KHypertournament> {
    let verdict = check_losing_seq_k(params, r)?;
    if !verdict.accepted {
        return Err(Error::usage(format!(
            "sequence is not a losing score sequence: {verdict}"
        )));
    }
    match realize_flow_k(params, r)? {
        FlowOutcomeK::Feasible(h) => Ok(h),
        FlowOutcomeK::Infeasible(inf) => Err(Error::internal(format!(
            "accepted sequence {r:?} is infeasible ({inf})"
        ))),
    }
}
