//! Loser assignment as a bipartite b-matching, solved with Dinic's max-flow.
//!
//! Network: source -> support (cap 1) -> member vertex (cap 1) -> sink (cap =
//! quota). A flow saturating every support picks exactly one loser per
//! support while no vertex exceeds its quota; if the quotas also sum to the
//! number of supports, every quota is met exactly.

use std::collections::VecDeque;

#[derive(Debug, Clone, Copy)]
struct Edge {
    to: usize,
    cap: u64,
    rev: usize,
}

struct Dinic {
    graph: Vec<Vec<Edge>>,
    level: Vec<i64>,
    iter: Vec<usize>,
}

impl Dinic {
    fn new(size: usize) -> Self {
        Dinic {
            graph: vec![Vec::new(); size],
            level: vec![-1; size],
            iter: vec![0; size],
        }
    }

    fn add_edge(&mut self, from: usize, to: usize, cap: u64) -> usize {
        let rev_from = self.graph[to].len();
        let rev_to = self.graph[from].len();
        self.graph[from].push(Edge {
            to,
            cap,
            rev: rev_from,
        });
        self.graph[to].push(Edge {
            to: from,
            cap: 0,
            rev: rev_to,
        });
        rev_to
    }

    fn bfs(&mut self, source: usize) {
        self.level.iter_mut().for_each(|l| *l = -1);
        let mut queue = VecDeque::new();
        self.level[source] = 0;
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            for e in &self.graph[v] {
                if e.cap > 0 && self.level[e.to] < 0 {
                    self.level[e.to] = self.level[v] + 1;
                    queue.push_back(e.to);
                }
            }
        }
    }

    fn dfs(&mut self, v: usize, sink: usize, f: u64) -> u64 {
        if v == sink {
            return f;
        }
        while self.iter[v] < self.graph[v].len() {
            let e = self.graph[v][self.iter[v]];
            if e.cap > 0 && self.level[v] < self.level[e.to] {
                let d = self.dfs(e.to, sink, f.min(e.cap));
                if d > 0 {
                    self.graph[v][self.iter[v]].cap -= d;
                    self.graph[e.to][e.rev].cap += d;
                    return d;
                }
            }
            self.iter[v] += 1;
        }
        0
    }

    fn max_flow(&mut self, source: usize, sink: usize) -> u64 {
        let mut flow = 0;
        loop {
            self.bfs(source);
            if self.level[sink] < 0 {
                return flow;
            }
            self.iter.iter_mut().for_each(|i| *i = 0);
            loop {
                let f = self.dfs(source, sink, u64::MAX);
                if f == 0 {
                    break;
                }
                flow += f;
            }
        }
    }
}

/// Outcome of [`assign_losers`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Assignment {
    /// `losers[s]` is the position within `supports[s]` of its loser.
    Feasible(Vec<usize>),
    Infeasible {
        max_flow: u64,
        required: u64,
    },
}

/// Picks one loser per support (vertices are dense ids `0..quotas.len()`)
/// so that vertex `x` loses exactly `quotas[x]` times.
pub(crate) fn assign_losers(supports: &[Vec<usize>], quotas: &[u64]) -> Assignment {
    let s = supports.len();
    let source = 0;
    let sink = 1 + s + quotas.len();
    let vertex_node = |x: usize| 1 + s + x;
    let mut dinic = Dinic::new(sink + 1);
    let mut member_edges = Vec::with_capacity(s);
    for (i, members) in supports.iter().enumerate() {
        dinic.add_edge(source, 1 + i, 1);
        let edges: Vec<usize> = members
            .iter()
            .map(|&x| dinic.add_edge(1 + i, vertex_node(x), 1))
            .collect();
        member_edges.push(edges);
    }
    for (x, &q) in quotas.iter().enumerate() {
        if q > 0 {
            dinic.add_edge(vertex_node(x), sink, q);
        }
    }
    let max_flow = dinic.max_flow(source, sink);
    let required = s as u64;
    let quota_total: u64 = quotas.iter().sum();
    if max_flow != required || quota_total != required {
        return Assignment::Infeasible { max_flow, required };
    }
    let losers = member_edges
        .iter()
        .enumerate()
        .map(|(i, edges)| {
            edges
                .iter()
                .position(|&e| dinic.graph[1 + i][e].cap == 0)
                .expect("saturated support routes its unit through one member")
        })
        .collect();
    Assignment::Feasible(losers)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_quotas() {
        let supports = vec![vec![0, 1], vec![0, 2], vec![1, 2]];
        match assign_losers(&supports, &[0, 1, 2]) {
            Assignment::Feasible(l) => {
                let mut count = [0u64; 3];
                for (s, &pos) in supports.iter().zip(&l) {
                    count[s[pos]] += 1;
                }
                assert_eq!(count, [0, 1, 2]);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            assign_losers(&supports, &[0, 0, 3]),
            Assignment::Infeasible {
                max_flow: 2,
                required: 3
            }
        );
        assert!(matches!(
            assign_losers(&supports, &[1, 1, 2]),
            Assignment::Infeasible { .. }
        ));
    }
}
