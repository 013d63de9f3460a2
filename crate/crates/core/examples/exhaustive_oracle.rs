// Enumerates every loser assignment and compares the achieved losing lists
// with the lists the characterization accepts.

use std::collections::BTreeSet;

use hypertourney::oracle::{candidate_lists, enumerate_bipartite};
use hypertourney::{check_losing_lists_bipartite, BipartiteParams, Budget};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let budget = Budget::from_env()?;
    let params = BipartiteParams::new(3, 2, 2, 2)?;

    let report = enumerate_bipartite(params, &budget)?;
    let mut accepted = BTreeSet::new();
    for (a, b) in candidate_lists(params, &budget)? {
        if check_losing_lists_bipartite(params, &a, &b)?.accepted {
            accepted.insert((a, b));
        }
    }

    println!(
        "{} assignments, {} distinct pairs, {:?}",
        report.assignment_count,
        report.achieved.len(),
        report.elapsed
    );
    for (a, b) in &report.achieved {
        println!("  A={a:?} B={b:?}");
    }
    assert_eq!(report.achieved, accepted);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
