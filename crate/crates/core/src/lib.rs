//! Losing-score and score lists of `[h-k]`-bipartite hypertournaments and
//! `k`-hypertournaments.
//!
//! * [`criteria`] decides whether list pairs are (losing) score lists.
//! * [`realize`] builds an explicit hypertournament for accepted lists, by a
//!   constructive induction or by max-flow.
//! * [`oracle`] enumerates every loser assignment for small parameters and
//!   is the ground truth the other modules are tested against.
//! * [`cli`] holds the instance file format and the command-line front end.

pub mod binom;
pub mod budget;
pub mod cli;
pub mod criteria;
mod error;
mod flow;
pub mod model;
pub mod oracle;
pub mod realize;

pub use binom::{arc_count, binom, ExactCount};
pub use budget::Budget;
pub use criteria::{
    check_corollary_bound, check_losing_lists_bipartite, check_losing_seq_k,
    check_score_lists_bipartite, check_score_seq_k, dual_bipartite, dual_k, totals, Verdict,
    Witness, WitnessKind,
};
pub use error::{Error, Result};
pub use model::{
    losing_scores, losing_scores_k, scores, scores_k, swap_entries, Arc, BipartiteHypertournament,
    BipartiteParams, KHypertournament, ListMode, ScoreListPair, Side, UniformParams, VertexRef,
};
pub use realize::{
    lemma22_swap, lemma23_step, realize_flow, realize_flow_k, realize_inductive, FlowOutcome,
    FlowOutcomeK, Method, RealizationResult,
};
