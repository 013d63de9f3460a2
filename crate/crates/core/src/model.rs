//! Bipartite hypertournaments, k-hypertournaments and their (losing) scores.
//!
//! An arc is a linear order of its vertices; the final entry is the arc's
//! loser. A vertex's losing score counts the arcs in which it comes last and
//! its score counts the arcs in which it appears anywhere else.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;

use crate::binom::{self, ExactCount};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    U,
    V,
}

impl Side {
    pub fn flipped(self) -> Side {
        match self {
            Side::U => Side::V,
            Side::V => Side::U,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::U => f.write_str("u"),
            Side::V => f.write_str("v"),
        }
    }
}

/// A vertex named by side and 1-based index. Vertices of a k-hypertournament
/// carry no side.
///
/// The derived order puts unsided vertices first, then all of `U`, then all
/// of `V`, each ascending by index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexRef {
    pub side: Option<Side>,
    pub index: usize,
}

impl VertexRef {
    pub const fn u(index: usize) -> Self {
        VertexRef {
            side: Some(Side::U),
            index,
        }
    }

    pub const fn v(index: usize) -> Self {
        VertexRef {
            side: Some(Side::V),
            index,
        }
    }

    pub const fn plain(index: usize) -> Self {
        VertexRef { side: None, index }
    }

    /// Same index on the other side; unsided vertices are left alone.
    pub fn transposed(self) -> Self {
        VertexRef {
            side: self.side.map(Side::flipped),
            index: self.index,
        }
    }
}

impl fmt::Display for VertexRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Some(side) => write!(f, "{side}{}", self.index),
            None => write!(f, "{}", self.index),
        }
    }
}

/// Sorted vertex set underlying an arc.
pub type SupportKey = Vec<VertexRef>;

fn format_support(key: &[VertexRef]) -> String {
    format!("{{{}}}", key.iter().join(","))
}

/// An ordered tuple of distinct vertices; the last entry loses.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arc {
    entries: Vec<VertexRef>,
}

impl Arc {
    pub fn new(entries: Vec<VertexRef>) -> Self {
        Arc { entries }
    }

    /// The canonical arc on `support` losing at `loser`: every other vertex in
    /// ascending order, then the loser.
    pub fn canonical(support: &[VertexRef], loser: VertexRef) -> Self {
        let mut entries: Vec<VertexRef> = support
            .iter()
            .copied()
            .filter(|&x| x != loser)
            .sorted()
            .collect();
        entries.push(loser);
        Arc { entries }
    }

    pub fn entries(&self) -> &[VertexRef] {
        &self.entries
    }

    pub fn loser(&self) -> Option<VertexRef> {
        self.entries.last().copied()
    }

    pub fn contains(&self, x: VertexRef) -> bool {
        self.entries.contains(&x)
    }

    pub fn position(&self, x: VertexRef) -> Option<usize> {
        self.entries.iter().position(|&e| e == x)
    }

    pub fn support(&self) -> SupportKey {
        self.entries.iter().copied().sorted().collect()
    }

    /// Same loser, other entries ascending.
    pub fn canonicalized(&self) -> Arc {
        match self.loser() {
            Some(loser) => Arc::canonical(&self.entries, loser),
            None => self.clone(),
        }
    }

    fn transposed(&self) -> Arc {
        Arc::new(self.entries.iter().map(|x| x.transposed()).collect())
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.entries.iter().join(","))
    }
}

/// `e(x, y)`: the arc obtained from `e` by interchanging the vertices `x`
/// and `y`.
pub fn swap_entries(e: &Arc, x: VertexRef, y: VertexRef) -> Result<Arc> {
    let px = e
        .position(x)
        .ok_or_else(|| Error::usage(format!("{x} does not occur in arc {e}")))?;
    let py = e
        .position(y)
        .ok_or_else(|| Error::usage(format!("{y} does not occur in arc {e}")))?;
    let mut entries = e.entries.clone();
    entries.swap(px, py);
    Ok(Arc { entries })
}

/// Order `m x n` with `[h-k]`-arcs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BipartiteParams {
    pub m: usize,
    pub n: usize,
    pub h: usize,
    pub k: usize,
}

impl BipartiteParams {
    pub fn new(m: usize, n: usize, h: usize, k: usize) -> Result<Self> {
        // arc_count carries the range check
        binom::arc_count(m, n, h, k)?;
        Ok(BipartiteParams { m, n, h, k })
    }

    pub fn arc_count(&self) -> Result<ExactCount> {
        binom::arc_count(self.m, self.n, self.h, self.k)
    }

    pub fn u_incidence(&self) -> Result<ExactCount> {
        binom::u_incidence(self.m, self.n, self.h, self.k)
    }

    pub fn v_incidence(&self) -> Result<ExactCount> {
        binom::v_incidence(self.m, self.n, self.h, self.k)
    }

    /// The same hypertournament family with `U` and `V` exchanged.
    pub fn transposed(&self) -> Self {
        BipartiteParams {
            m: self.n,
            n: self.m,
            h: self.k,
            k: self.h,
        }
    }

    /// Number of vertices on `side`.
    pub fn side_len(&self, side: Side) -> usize {
        match side {
            Side::U => self.m,
            Side::V => self.n,
        }
    }

    /// Warnings for parameters outside `h > 1, k > 1`. Such inputs are still
    /// evaluated (`h = k = 1` is the bipartite tournament case).
    pub fn hypothesis_warnings(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.h == 1 || self.k == 1 {
            out.push(format!(
                "h={} k={}: the characterization is stated for h > 1 and k > 1",
                self.h, self.k
            ));
        }
        out
    }

    /// Defects of one arc in isolation (length, ranges, repeats, side counts).
    pub fn arc_defects(&self, arc_no: usize, arc: &Arc) -> Vec<Violation> {
        let (m, n) = (self.m, self.n);
        let in_range = move |x: VertexRef| match x.side {
            Some(Side::U) => (1..=m).contains(&x.index),
            Some(Side::V) => (1..=n).contains(&x.index),
            None => false,
        };
        arc_defects(
            arc_no,
            arc,
            self.h + self.k,
            &in_range,
            Some((self.h, self.k)),
        )
    }

    /// Every arc support in lexicographic order (U part first, then V part).
    pub fn supports(&self) -> impl Iterator<Item = SupportKey> + '_ {
        (1..=self.m)
            .combinations(self.h)
            .cartesian_product((1..=self.n).combinations(self.k).collect::<Vec<_>>())
            .map(|(us, vs)| {
                us.into_iter()
                    .map(VertexRef::u)
                    .chain(vs.into_iter().map(VertexRef::v))
                    .collect()
            })
    }
}

impl fmt::Display for BipartiteParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {}", self.m, self.n, self.h, self.k)
    }
}

/// `k`-hypertournament on `n` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct UniformParams {
    pub n: usize,
    pub k: usize,
}

impl UniformParams {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if k >= 1 && n >= k {
            Ok(UniformParams { n, k })
        } else {
            Err(Error::usage(format!(
                "parameters must satisfy n >= k >= 1, got n={n} k={k}"
            )))
        }
    }

    pub fn arc_count(&self) -> Result<ExactCount> {
        binom::choose(self.n as u64, self.k as u64)
    }

    /// Arcs containing a fixed vertex: `C(n-1, k-1)`.
    pub fn incidence(&self) -> Result<ExactCount> {
        binom::choose(self.n as u64 - 1, self.k as u64 - 1)
    }

    pub fn hypothesis_warnings(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.k == 1 {
            out.push("k=1: the characterization is stated for k > 1".to_string());
        }
        out
    }

    pub fn arc_defects(&self, arc_no: usize, arc: &Arc) -> Vec<Violation> {
        let n = self.n;
        let in_range = move |x: VertexRef| x.side.is_none() && (1..=n).contains(&x.index);
        arc_defects(arc_no, arc, self.k, &in_range, None)
    }

    pub fn supports(&self) -> impl Iterator<Item = SupportKey> {
        (1..=self.n)
            .combinations(self.k)
            .map(|c| c.into_iter().map(VertexRef::plain).collect())
    }
}

impl fmt::Display for UniformParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.n, self.k)
    }
}

/// One structural defect. Arc numbers are 1-based positions in the arc list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    WrongLength {
        arc: usize,
        len: usize,
        expected: usize,
    },
    VertexOutOfRange {
        arc: usize,
        vertex: VertexRef,
    },
    RepeatedVertex {
        arc: usize,
        vertex: VertexRef,
    },
    SideCounts {
        arc: usize,
        u: usize,
        v: usize,
    },
    DuplicateSupport {
        support: SupportKey,
        count: usize,
    },
    MissingSupport {
        support: SupportKey,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::WrongLength { arc, len, expected } => {
                write!(f, "arc {arc} has {len} entries, expected {expected}")
            }
            Violation::VertexOutOfRange { arc, vertex } => {
                write!(f, "arc {arc} names vertex {vertex} which is out of range")
            }
            Violation::RepeatedVertex { arc, vertex } => {
                write!(f, "arc {arc} repeats vertex {vertex}")
            }
            Violation::SideCounts { arc, u, v } => {
                write!(f, "arc {arc} has {u} U-vertices and {v} V-vertices")
            }
            Violation::DuplicateSupport { support, count } => write!(
                f,
                "duplicate support {}: {count} arcs",
                format_support(support)
            ),
            Violation::MissingSupport { support } => {
                write!(f, "missing support {}", format_support(support))
            }
        }
    }
}

/// Defects of a single arc; `arc_no` is used for reporting only.
fn arc_defects(
    arc_no: usize,
    arc: &Arc,
    expected_len: usize,
    in_range: &impl Fn(VertexRef) -> bool,
    side_counts: Option<(usize, usize)>,
) -> Vec<Violation> {
    let mut out = Vec::new();
    if arc.entries.len() != expected_len {
        out.push(Violation::WrongLength {
            arc: arc_no,
            len: arc.entries.len(),
            expected: expected_len,
        });
    }
    for &x in &arc.entries {
        if !in_range(x) {
            out.push(Violation::VertexOutOfRange {
                arc: arc_no,
                vertex: x,
            });
        }
    }
    for w in arc.support().windows(2) {
        if w[0] == w[1] {
            out.push(Violation::RepeatedVertex {
                arc: arc_no,
                vertex: w[0],
            });
        }
    }
    if let Some((h, k)) = side_counts {
        let u = arc
            .entries
            .iter()
            .filter(|x| x.side == Some(Side::U))
            .count();
        let v = arc.entries.len() - u;
        if (u, v) != (h, k) {
            out.push(Violation::SideCounts { arc: arc_no, u, v });
        }
    }
    out
}

fn validate_arcs<I>(
    arcs: &[Arc],
    mut defects: impl FnMut(usize, &Arc) -> Vec<Violation>,
    expected_supports: I,
) -> Vec<Violation>
where
    I: IntoIterator<Item = SupportKey>,
{
    let mut violations = Vec::new();
    let mut seen: BTreeMap<SupportKey, usize> = BTreeMap::new();
    for (pos, arc) in arcs.iter().enumerate() {
        let found = defects(pos + 1, arc);
        if found.is_empty() {
            *seen.entry(arc.support()).or_default() += 1;
        }
        violations.extend(found);
    }
    for (support, &count) in &seen {
        if count > 1 {
            violations.push(Violation::DuplicateSupport {
                support: support.clone(),
                count,
            });
        }
    }
    for support in expected_supports {
        if !seen.contains_key(&support) {
            violations.push(Violation::MissingSupport { support });
        }
    }
    violations
}

fn sort_by_support(arcs: &mut [Arc]) {
    arcs.sort_by_cached_key(|a| a.support());
}

/// An `[h-k]`-bipartite hypertournament of order `m x n`.
///
/// Arcs are kept sorted by support so that structurally equal instances
/// compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteHypertournament {
    params: BipartiteParams,
    arcs: Vec<Arc>,
}

impl BipartiteHypertournament {
    /// Builds and validates an instance.
    pub fn new(params: BipartiteParams, arcs: Vec<Arc>) -> Result<Self> {
        let h = Self::from_arcs_unchecked(params, arcs);
        h.check()?;
        Ok(h)
    }

    /// Builds an instance without validation; see [`Self::validate_structure`].
    pub fn from_arcs_unchecked(params: BipartiteParams, mut arcs: Vec<Arc>) -> Self {
        sort_by_support(&mut arcs);
        BipartiteHypertournament { params, arcs }
    }

    /// One canonical arc per support with the loser picked by `loser_of`.
    pub fn from_losers(
        params: BipartiteParams,
        mut loser_of: impl FnMut(&[VertexRef]) -> VertexRef,
    ) -> Self {
        let arcs = params
            .supports()
            .map(|s| {
                let loser = loser_of(&s);
                Arc::canonical(&s, loser)
            })
            .collect();
        BipartiteHypertournament { params, arcs }
    }

    pub fn params(&self) -> BipartiteParams {
        self.params
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Every structural defect, empty when the instance is valid.
    pub fn validate_structure(&self) -> Vec<Violation> {
        validate_arcs(
            &self.arcs,
            |no, arc| self.params.arc_defects(no, arc),
            self.params.supports(),
        )
    }

    pub fn check(&self) -> Result<()> {
        let violations = self.validate_structure();
        if violations.is_empty() {
            Ok(())
        } else {
            Err(Error::Structure(violations))
        }
    }

    /// Index of the arc on `support`, for an instance sorted by support.
    pub fn position_of_support(&self, support: &[VertexRef]) -> Option<usize> {
        self.arcs
            .binary_search_by(|a| a.support().as_slice().cmp(support))
            .ok()
    }

    /// The instance with the arcs at the given positions replaced. Supports
    /// must be preserved by the replacements.
    pub fn with_replaced(&self, replacements: &[(usize, Arc)]) -> Self {
        let mut arcs = self.arcs.clone();
        for (pos, arc) in replacements {
            debug_assert_eq!(arcs[*pos].support(), arc.support());
            arcs[*pos] = arc.clone();
        }
        BipartiteHypertournament {
            params: self.params,
            arcs,
        }
    }

    /// Exchanges the roles of `U` and `V`.
    pub fn transposed(&self) -> Self {
        Self::from_arcs_unchecked(
            self.params.transposed(),
            self.arcs.iter().map(Arc::transposed).collect(),
        )
    }

    /// Every arc rewritten in canonical order (same losers).
    pub fn canonicalized(&self) -> Self {
        BipartiteHypertournament {
            params: self.params,
            arcs: self.arcs.iter().map(Arc::canonicalized).collect(),
        }
    }

    /// Per-vertex losing scores without a structure check.
    pub(crate) fn raw_losing(&self) -> VertexScores {
        let mut out = VertexScores {
            u: vec![0; self.params.m],
            v: vec![0; self.params.n],
        };
        for arc in &self.arcs {
            if let Some(x) = arc.loser() {
                *out.get_mut(x) += 1;
            }
        }
        out
    }
}

/// Returns `Ok(())` or every violation found.
pub fn validate_structure(h: &BipartiteHypertournament) -> std::result::Result<(), Vec<Violation>> {
    let v = h.validate_structure();
    if v.is_empty() {
        Ok(())
    } else {
        Err(v)
    }
}

/// Per-vertex values; `u[i - 1]` belongs to `u_i`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VertexScores {
    pub u: Vec<u64>,
    pub v: Vec<u64>,
}

impl VertexScores {
    pub fn get(&self, x: VertexRef) -> u64 {
        match x.side {
            Some(Side::U) => self.u[x.index - 1],
            Some(Side::V) => self.v[x.index - 1],
            None => panic!("unsided vertex {x} in a bipartite score table"),
        }
    }

    fn get_mut(&mut self, x: VertexRef) -> &mut u64 {
        match x.side {
            Some(Side::U) => &mut self.u[x.index - 1],
            Some(Side::V) => &mut self.v[x.index - 1],
            None => panic!("unsided vertex {x} in a bipartite score table"),
        }
    }

    pub fn sorted(&self, mode: ListMode) -> ScoreListPair {
        ScoreListPair::canonicalize(self.u.clone(), self.v.clone(), mode)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ListMode {
    Losing,
    Score,
}

impl ListMode {
    pub fn flipped(self) -> ListMode {
        match self {
            ListMode::Losing => ListMode::Score,
            ListMode::Score => ListMode::Losing,
        }
    }
}

pub(crate) fn is_non_decreasing(xs: &[u64]) -> bool {
    xs.windows(2).all(|w| w[0] <= w[1])
}

/// Two non-decreasing lists, one per side.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ScoreListPair {
    a: Vec<u64>,
    b: Vec<u64>,
    mode: ListMode,
}

impl ScoreListPair {
    pub fn new(a: Vec<u64>, b: Vec<u64>, mode: ListMode) -> Result<Self> {
        for (name, xs) in [("first", &a), ("second", &b)] {
            if !is_non_decreasing(xs) {
                return Err(Error::usage(format!(
                    "{name} list {xs:?} is not non-decreasing"
                )));
            }
        }
        Ok(ScoreListPair { a, b, mode })
    }

    /// Sorts raw per-vertex values into a list pair.
    pub fn canonicalize(mut a: Vec<u64>, mut b: Vec<u64>, mode: ListMode) -> Self {
        a.sort_unstable();
        b.sort_unstable();
        ScoreListPair { a, b, mode }
    }

    /// The `U`-side list (`A` or `C`).
    pub fn a(&self) -> &[u64] {
        &self.a
    }

    /// The `V`-side list (`B` or `D`).
    pub fn b(&self) -> &[u64] {
        &self.b
    }

    pub fn mode(&self) -> ListMode {
        self.mode
    }

    pub fn into_parts(self) -> (Vec<u64>, Vec<u64>) {
        (self.a, self.b)
    }
}

pub fn format_list(xs: &[u64]) -> String {
    format!("[{}]", xs.iter().join(","))
}

impl fmt::Display for ScoreListPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (x, y) = match self.mode {
            ListMode::Losing => ("A", "B"),
            ListMode::Score => ("C", "D"),
        };
        write!(
            f,
            "{x}={} {y}={}",
            format_list(&self.a),
            format_list(&self.b)
        )
    }
}

/// Per-vertex losing scores and the sorted losing lists `(A, B)`.
pub fn losing_scores(h: &BipartiteHypertournament) -> Result<(VertexScores, ScoreListPair)> {
    h.check()?;
    let per_vertex = h.raw_losing();
    let sorted = per_vertex.sorted(ListMode::Losing);
    Ok((per_vertex, sorted))
}

/// Per-vertex scores and the sorted score lists `(C, D)`.
pub fn scores(h: &BipartiteHypertournament) -> Result<(VertexScores, ScoreListPair)> {
    let (losing, _) = losing_scores(h)?;
    let iu = h.params.u_incidence()?.get();
    let iv = h.params.v_incidence()?.get();
    let per_vertex = VertexScores {
        u: losing.u.iter().map(|&x| iu - x).collect(),
        v: losing.v.iter().map(|&x| iv - x).collect(),
    };
    let sorted = per_vertex.sorted(ListMode::Score);
    Ok((per_vertex, sorted))
}

/// A `k`-hypertournament on vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KHypertournament {
    params: UniformParams,
    arcs: Vec<Arc>,
}

impl KHypertournament {
    pub fn new(params: UniformParams, arcs: Vec<Arc>) -> Result<Self> {
        let h = Self::from_arcs_unchecked(params, arcs);
        h.check()?;
        Ok(h)
    }

    pub fn from_arcs_unchecked(params: UniformParams, mut arcs: Vec<Arc>) -> Self {
        sort_by_support(&mut arcs);
        KHypertournament { params, arcs }
    }

    pub fn from_losers(
        params: UniformParams,
        mut loser_of: impl FnMut(&[VertexRef]) -> VertexRef,
    ) -> Self {
        let arcs = params
            .supports()
            .map(|s| {
                let loser = loser_of(&s);
                Arc::canonical(&s, loser)
            })
            .collect();
        KHypertournament { params, arcs }
    }

    pub fn params(&self) -> UniformParams {
        self.params
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn validate_structure(&self) -> Vec<Violation> {
        validate_arcs(
            &self.arcs,
            |no, arc| self.params.arc_defects(no, arc),
            self.params.supports(),
        )
    }

    pub fn check(&self) -> Result<()> {
        let violations = self.validate_structure();
        if violations.is_empty() {
            Ok(())
        } else {
            Err(Error::Structure(violations))
        }
    }
}

/// Per-vertex losing scores (`r[i - 1]` for vertex `i`) and the sorted
/// losing sequence.
pub fn losing_scores_k(h: &KHypertournament) -> Result<(Vec<u64>, Vec<u64>)> {
    h.check()?;
    let mut per_vertex = vec![0u64; h.params.n];
    for arc in &h.arcs {
        if let Some(x) = arc.loser() {
            per_vertex[x.index - 1] += 1;
        }
    }
    let mut sorted = per_vertex.clone();
    sorted.sort_unstable();
    Ok((per_vertex, sorted))
}

/// Per-vertex scores and the sorted score sequence.
pub fn scores_k(h: &KHypertournament) -> Result<(Vec<u64>, Vec<u64>)> {
    let (losing, _) = losing_scores_k(h)?;
    let inc = h.params.incidence()?.get();
    let per_vertex: Vec<u64> = losing.iter().map(|&x| inc - x).collect();
    let mut sorted = per_vertex.clone();
    sorted.sort_unstable();
    Ok((per_vertex, sorted))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(m: usize, n: usize, h: usize, k: usize) -> BipartiteParams {
        BipartiteParams::new(m, n, h, k).unwrap()
    }

    fn single_arc() -> BipartiteHypertournament {
        let arc = Arc::new(vec![
            VertexRef::u(1),
            VertexRef::u(2),
            VertexRef::v(1),
            VertexRef::v(2),
        ]);
        BipartiteHypertournament::new(p(2, 2, 2, 2), vec![arc]).unwrap()
    }

    /// (3,2,2,2) with losers keyed by the U-pair of each support.
    fn three_arc(losers: [VertexRef; 3]) -> BipartiteHypertournament {
        let params = p(3, 2, 2, 2);
        let mut it = losers.into_iter();
        BipartiteHypertournament::from_losers(params, |_| it.next().unwrap())
    }

    #[test]
    fn single_arc_scores() {
        let h = single_arc();
        let (per, sorted) = losing_scores(&h).unwrap();
        assert_eq!(per.u, vec![0, 0]);
        assert_eq!(per.v, vec![0, 1]);
        assert_eq!(sorted.a(), &[0, 0]);
        assert_eq!(sorted.b(), &[0, 1]);
        let (_, s) = scores(&h).unwrap();
        assert_eq!(s.a(), &[1, 1]);
        assert_eq!(s.b(), &[0, 1]);
    }

    #[test]
    fn three_arc_losing_and_score_lists() {
        // supports in order: {u1,u2}, {u1,u3}, {u2,u3}
        let h = three_arc([VertexRef::u(2), VertexRef::u(3), VertexRef::v(2)]);
        let (per, sorted) = losing_scores(&h).unwrap();
        assert_eq!(per.u, vec![0, 1, 1]);
        assert_eq!(per.v, vec![0, 1]);
        assert_eq!(sorted.to_string(), "A=[0,1,1] B=[0,1]");
        let (_, s) = scores(&h).unwrap();
        // direct count of non-final occurrences
        let mut direct = VertexScores {
            u: vec![0; 3],
            v: vec![0; 2],
        };
        for arc in h.arcs() {
            for &x in &arc.entries()[..arc.entries().len() - 1] {
                *direct.get_mut(x) += 1;
            }
        }
        assert_eq!(direct.sorted(ListMode::Score), s);
        assert_eq!(s.to_string(), "C=[1,1,2] D=[2,3]");

        let h = three_arc([VertexRef::v(2); 3]);
        let (_, sorted) = losing_scores(&h).unwrap();
        assert_eq!(sorted.a(), &[0, 0, 0]);
        assert_eq!(sorted.b(), &[0, 3]);
    }

    #[test]
    fn score_total_is_lemma_identity() {
        let h = three_arc([VertexRef::u(1), VertexRef::v(1), VertexRef::u(3)]);
        let (per, _) = scores(&h).unwrap();
        let total: u64 = per.u.iter().chain(&per.v).sum();
        assert_eq!(total, 3 * 3);
    }

    #[test]
    fn swap_entries_examples() {
        let e = Arc::new(vec![
            VertexRef::u(1),
            VertexRef::u(2),
            VertexRef::v(1),
            VertexRef::v(2),
        ]);
        let s = swap_entries(&e, VertexRef::u(1), VertexRef::u(2)).unwrap();
        assert_eq!(s.to_string(), "(u2,u1,v1,v2)");
        assert_eq!(
            swap_entries(&s, VertexRef::u(1), VertexRef::u(2)).unwrap(),
            e
        );

        let t = swap_entries(&e, VertexRef::u(1), VertexRef::v(2)).unwrap();
        assert_eq!(t.to_string(), "(v2,u2,v1,u1)");
        assert_eq!(t.loser(), Some(VertexRef::u(1)));
        assert_eq!(t.support(), e.support());

        assert!(matches!(
            swap_entries(&e, VertexRef::u(3), VertexRef::u(1)),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn validation_reports_missing_and_duplicate_supports() {
        assert!(validate_structure(&single_arc()).is_ok());

        let params = p(3, 2, 2, 2);
        let mut arcs = three_arc([VertexRef::v(2); 3]).arcs().to_vec();
        arcs.pop();
        let h = BipartiteHypertournament::from_arcs_unchecked(params, arcs.clone());
        let v = validate_structure(&h).unwrap_err();
        assert_eq!(v.len(), 1);
        assert!(v[0].to_string().starts_with("missing support"), "{}", v[0]);

        arcs.push(arcs[0].clone());
        let h = BipartiteHypertournament::from_arcs_unchecked(params, arcs);
        let v = validate_structure(&h).unwrap_err();
        assert!(v
            .iter()
            .any(|x| x.to_string().starts_with("duplicate support")));
        assert!(v
            .iter()
            .any(|x| x.to_string().starts_with("missing support")));
        assert!(matches!(losing_scores(&h), Err(Error::Structure(_))));
    }

    #[test]
    fn validation_reports_bad_arcs() {
        let params = p(2, 2, 2, 2);
        let bad = [
            vec![
                VertexRef::u(1),
                VertexRef::u(3),
                VertexRef::v(1),
                VertexRef::v(2),
            ],
            vec![
                VertexRef::u(1),
                VertexRef::u(1),
                VertexRef::v(1),
                VertexRef::v(2),
            ],
            vec![VertexRef::u(1), VertexRef::v(1), VertexRef::v(2)],
            vec![
                VertexRef::u(1),
                VertexRef::plain(2),
                VertexRef::v(1),
                VertexRef::v(2),
            ],
        ];
        for entries in bad {
            let h = BipartiteHypertournament::from_arcs_unchecked(params, vec![Arc::new(entries)]);
            let v = h.validate_structure();
            assert!(v.len() >= 2, "{v:?}");
            assert!(matches!(v.last(), Some(Violation::MissingSupport { .. })));
        }
    }

    #[test]
    fn supports_enumerated_in_lexicographic_order() {
        let params = p(3, 3, 2, 2);
        let all: Vec<_> = params.supports().collect();
        assert_eq!(all.len(), 9);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn transposition_swaps_lists() {
        let h = three_arc([VertexRef::u(2), VertexRef::u(3), VertexRef::v(2)]);
        let t = h.transposed();
        t.check().unwrap();
        let (_, a) = losing_scores(&h).unwrap();
        let (_, b) = losing_scores(&t).unwrap();
        assert_eq!(a.a(), b.b());
        assert_eq!(a.b(), b.a());
        assert_eq!(t.transposed(), h);
    }

    #[test]
    fn uniform_instance() {
        let params = UniformParams::new(3, 2).unwrap();
        let arcs = vec![
            Arc::new(vec![VertexRef::plain(1), VertexRef::plain(2)]),
            Arc::new(vec![VertexRef::plain(3), VertexRef::plain(1)]),
            Arc::new(vec![VertexRef::plain(2), VertexRef::plain(3)]),
        ];
        let h = KHypertournament::new(params, arcs).unwrap();
        let (per, sorted) = losing_scores_k(&h).unwrap();
        assert_eq!(per, vec![1, 1, 1]);
        assert_eq!(sorted, vec![1, 1, 1]);
        assert_eq!(scores_k(&h).unwrap().1, vec![1, 1, 1]);

        let dup = KHypertournament::from_arcs_unchecked(
            params,
            vec![
                Arc::new(vec![VertexRef::plain(1), VertexRef::plain(2)]),
                Arc::new(vec![VertexRef::plain(2), VertexRef::plain(1)]),
                Arc::new(vec![VertexRef::plain(2), VertexRef::plain(3)]),
            ],
        );
        let v = dup.validate_structure();
        assert_eq!(v.len(), 2);
    }

    #[test]
    fn score_list_pair_requires_sorted_input() {
        assert!(ScoreListPair::new(vec![1, 0], vec![0], ListMode::Losing).is_err());
        let c = ScoreListPair::canonicalize(vec![1, 0], vec![3, 2], ListMode::Losing);
        assert_eq!(c.to_string(), "A=[0,1] B=[2,3]");
    }
}
