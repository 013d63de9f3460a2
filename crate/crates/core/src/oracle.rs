//! Exhaustive ground truth for small parameters.
//!
//! Scores depend on an arc only through its last entry, so enumerating every
//! loser assignment (one loser per support) covers every achievable pair of
//! losing lists: `(h+k)^arcs` assignments instead of `((h+k)!)^arcs`
//! orderings.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::binom::ExactCount;
use crate::budget::Budget;
use crate::error::Result;
use crate::model::{
    BipartiteHypertournament, BipartiteParams, KHypertournament, Side, UniformParams, VertexRef,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationReport<P, T: Ord> {
    pub params: P,
    /// Every sorted losing list (pair) some assignment produces.
    pub achieved: BTreeSet<T>,
    pub assignment_count: ExactCount,
    pub elapsed: Duration,
}

/// Sorted `(A, B)` pairs.
pub type BipartiteReport = EnumerationReport<BipartiteParams, (Vec<u64>, Vec<u64>)>;
/// Sorted losing sequences.
pub type UniformReport = EnumerationReport<UniformParams, Vec<u64>>;

/// Runs `visit` on the per-vertex loss counts of every loser assignment.
fn for_each_assignment(supports: &[Vec<usize>], vertices: usize, mut visit: impl FnMut(&[u64])) {
    let mut counts = vec![0u64; vertices];
    let mut choice = vec![0usize; supports.len()];
    for s in supports {
        counts[s[0]] += 1;
    }
    loop {
        visit(&counts);
        // odometer step
        let mut pos = 0;
        loop {
            if pos == supports.len() {
                return;
            }
            let members = &supports[pos];
            counts[members[choice[pos]]] -= 1;
            choice[pos] += 1;
            if choice[pos] < members.len() {
                counts[members[choice[pos]]] += 1;
                break;
            }
            choice[pos] = 0;
            counts[members[0]] += 1;
            pos += 1;
        }
    }
}

fn sorted(xs: &[u64]) -> Vec<u64> {
    let mut v = xs.to_vec();
    v.sort_unstable();
    v
}

/// Every sorted losing list pair of an `[h-k]`-bipartite hypertournament of
/// order `m x n`, by enumerating all `(h+k)^arcs` loser assignments.
pub fn enumerate_bipartite(params: BipartiteParams, budget: &Budget) -> Result<BipartiteReport> {
    let arcs = params.arc_count()?;
    let needed = ExactCount::new((params.h + params.k) as u64).checked_pow(arcs.get());
    budget.check_enumeration("bipartite enumeration", needed)?;
    let start = Instant::now();
    let m = params.m;
    let supports: Vec<Vec<usize>> = params
        .supports()
        .map(|s| {
            s.iter()
                .map(|x| match x.side {
                    Some(Side::U) => x.index - 1,
                    _ => m + x.index - 1,
                })
                .collect()
        })
        .collect();
    let mut achieved = BTreeSet::new();
    let mut visited = 0u64;
    for_each_assignment(&supports, m + params.n, |counts| {
        visited += 1;
        let (a, b) = counts.split_at(m);
        achieved.insert((sorted(a), sorted(b)));
    });
    Ok(EnumerationReport {
        params,
        achieved,
        assignment_count: ExactCount::new(visited),
        elapsed: start.elapsed(),
    })
}

/// Every sorted losing sequence of a `k`-hypertournament on `n` vertices.
pub fn enumerate_k(params: UniformParams, budget: &Budget) -> Result<UniformReport> {
    let arcs = params.arc_count()?;
    let needed = ExactCount::new(params.k as u64).checked_pow(arcs.get());
    budget.check_enumeration("uniform enumeration", needed)?;
    let start = Instant::now();
    let supports: Vec<Vec<usize>> = params
        .supports()
        .map(|s| s.iter().map(|x| x.index - 1).collect())
        .collect();
    let mut achieved = BTreeSet::new();
    let mut visited = 0u64;
    for_each_assignment(&supports, params.n, |counts| {
        visited += 1;
        achieved.insert(sorted(counts));
    });
    Ok(EnumerationReport {
        params,
        achieved,
        assignment_count: ExactCount::new(visited),
        elapsed: start.elapsed(),
    })
}

/// All non-decreasing sequences of length `len` with entries `<= cap` and
/// sum `<= limit`, lexicographic, bucketed by sum.
fn bounded_sequences(len: usize, cap: u64, limit: u64, budget: u64) -> Result<Vec<Vec<Vec<u64>>>> {
    struct Walk {
        len: usize,
        cap: u64,
        limit: u64,
        budget: u64,
        produced: u64,
        prefix: Vec<u64>,
        out: Vec<Vec<Vec<u64>>>,
    }

    impl Walk {
        /// False once the budget is exhausted.
        fn extend(&mut self, sum: u64) -> bool {
            if self.prefix.len() == self.len {
                self.produced += 1;
                if self.produced > self.budget {
                    return false;
                }
                self.out[sum as usize].push(self.prefix.clone());
                return true;
            }
            let remaining = (self.len - self.prefix.len()) as u64;
            let mut x = self.prefix.last().copied().unwrap_or(0);
            // every later entry is >= x
            while x <= self.cap && sum + x * remaining <= self.limit {
                self.prefix.push(x);
                let ok = self.extend(sum + x);
                self.prefix.pop();
                if !ok {
                    return false;
                }
                x += 1;
            }
            true
        }
    }

    let mut walk = Walk {
        len,
        cap,
        limit,
        budget,
        produced: 0,
        prefix: Vec::with_capacity(len),
        out: vec![Vec::new(); limit as usize + 1],
    };
    if !walk.extend(0) {
        return Err(crate::error::Error::Budget {
            what: "candidate generation",
            needed: format!("more than {budget}"),
            budget,
        });
    }
    Ok(walk.out)
}

/// Every non-decreasing pair `(A, B)` with `a_i <= C(m-1,h-1) C(n,k)`,
/// `b_j <= C(m,h) C(n-1,k-1)` and total `C(m,h) C(n,k)`, in lexicographic
/// order.
pub fn candidate_lists(
    params: BipartiteParams,
    budget: &Budget,
) -> Result<Vec<(Vec<u64>, Vec<u64>)>> {
    let total = params.arc_count()?.get();
    let cap_u = params.u_incidence()?.get();
    let cap_v = params.v_incidence()?.get();
    let limit = budget.enumeration;
    let by_sum_a = bounded_sequences(params.m, cap_u, total, limit)?;
    let by_sum_b = bounded_sequences(params.n, cap_v, total, limit)?;
    let mut a_all: Vec<&Vec<u64>> = by_sum_a.iter().flatten().collect();
    a_all.sort();
    let mut out = Vec::new();
    for a in a_all {
        let rest = total - a.iter().sum::<u64>();
        for b in &by_sum_b[rest as usize] {
            if out.len() as u64 >= limit {
                return Err(crate::error::Error::Budget {
                    what: "candidate generation",
                    needed: format!("more than {limit}"),
                    budget: limit,
                });
            }
            out.push((a.clone(), b.clone()));
        }
    }
    Ok(out)
}

/// Every non-decreasing sequence with entries `<= C(n-1,k-1)` and total
/// `C(n,k)`, in lexicographic order.
pub fn candidate_seqs_k(params: UniformParams, budget: &Budget) -> Result<Vec<Vec<u64>>> {
    let total = params.arc_count()?.get();
    let cap = params.incidence()?.get();
    let mut by_sum = bounded_sequences(params.n, cap, total, budget.enumeration)?;
    Ok(std::mem::take(&mut by_sum[total as usize]))
}

/// A hypertournament with each support's loser drawn uniformly from its
/// members (not uniform over full orderings); non-losers in canonical order.
pub fn random_hypertournament(
    params: BipartiteParams,
    seed: u64,
    budget: &Budget,
) -> Result<BipartiteHypertournament> {
    budget.check_realization("random instance", params.arc_count())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(BipartiteHypertournament::from_losers(params, |s| {
        s[rng.gen_range(0..s.len())]
    }))
}

/// Uniform-loser random `k`-hypertournament.
pub fn random_k_hypertournament(
    params: UniformParams,
    seed: u64,
    budget: &Budget,
) -> Result<KHypertournament> {
    budget.check_realization("random instance", params.arc_count())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(KHypertournament::from_losers(
        params,
        |s: &[VertexRef]| s[rng.gen_range(0..s.len())],
    ))
}
