// Checks losing-list and score-list pairs against the characterization and
// prints the verdicts, including the witness for a rejected pair.

use hypertourney::{
    check_losing_lists_bipartite, check_losing_seq_k, check_score_lists_bipartite, BipartiteParams,
    UniformParams,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let params = BipartiteParams::new(3, 3, 2, 2)?;

    for (a, b) in [
        (vec![0, 1, 3], vec![1, 2, 2]),
        (vec![0, 0, 4], vec![0, 0, 5]),
        (vec![0, 0, 0], vec![0, 0, 0]),
    ] {
        let verdict = check_losing_lists_bipartite(params, &a, &b)?;
        println!("losing {a:?} {b:?} -> {verdict}");
    }

    // Score lists are judged by their own bound.
    let verdict = check_score_lists_bipartite(params, &[3, 5, 6], &[4, 4, 5])?;
    println!("score  [3, 5, 6] [4, 4, 5] -> {verdict}");

    let uniform = UniformParams::new(4, 2)?;
    let verdict = check_losing_seq_k(uniform, &[0, 1, 2, 3])?;
    println!("uniform 4 2 [0, 1, 2, 3] -> {verdict}");
    assert!(verdict.accepted);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
