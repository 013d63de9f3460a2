// Builds a hypertournament for an accepted pair by induction on the number
// of vertices, printing each construction step.

use hypertourney::{losing_scores, realize_inductive, BipartiteParams};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let params = BipartiteParams::new(3, 3, 2, 2)?;
    let (a, b) = (vec![0, 1, 3], vec![1, 2, 2]);

    let result = realize_inductive(params, &a, &b)?;
    for step in &result.trace {
        println!("  {step}");
    }
    for arc in result.hypertournament.arcs() {
        println!("{arc}");
    }

    let (_, sorted) = losing_scores(&result.hypertournament)?;
    assert_eq!((sorted.a(), sorted.b()), (&a[..], &b[..]));
    println!("{sorted}, fallbacks={}", result.fallbacks());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
