// Maps losing lists to score lists and back.

use hypertourney::{
    check_losing_lists_bipartite, check_score_lists_bipartite, dual_bipartite, dual_k,
    BipartiteParams, ListMode, ScoreListPair, UniformParams,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let params = BipartiteParams::new(3, 2, 2, 2)?;
    let losing = ScoreListPair::new(vec![0, 1, 1], vec![0, 1], ListMode::Losing)?;
    let score = dual_bipartite(params, &losing)?;
    println!("{losing}  <->  {score}");

    assert_eq!(dual_bipartite(params, &score)?, losing);
    assert_eq!(
        check_losing_lists_bipartite(params, losing.a(), losing.b())?.accepted,
        check_score_lists_bipartite(params, score.a(), score.b())?.accepted,
    );

    let uniform = UniformParams::new(5, 3)?;
    let r = vec![0, 1, 2, 3, 4];
    let s = dual_k(uniform, &r)?;
    println!("R={r:?}  <->  S={s:?}");
    assert_eq!(dual_k(uniform, &s)?, r);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
