// Draws seeded random hypertournaments and checks the score totals.

use hypertourney::oracle::random_hypertournament;
use hypertourney::{losing_scores, scores, totals, BipartiteParams, Budget};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let params = BipartiteParams::new(4, 3, 2, 2)?;
    let expected = totals(params)?;
    let budget = Budget::default();

    for seed in 0..5 {
        let h = random_hypertournament(params, seed, &budget)?;
        let (_, losing) = losing_scores(&h)?;
        let (_, score) = scores(&h)?;
        println!("seed {seed}: {losing}  {score}");

        let sum = |l: &[u64], r: &[u64]| l.iter().chain(r).sum::<u64>();
        assert_eq!(sum(losing.a(), losing.b()), expected.losing_total.get());
        assert_eq!(sum(score.a(), score.b()), expected.score_total.get());
    }

    // Same seed, same instance.
    assert_eq!(
        random_hypertournament(params, 42, &budget)?,
        random_hypertournament(params, 42, &budget)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
