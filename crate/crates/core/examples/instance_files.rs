// Reads and writes the line-oriented instance format.

use hypertourney::cli::{parse_instance, serialize_instance, Instance};
use hypertourney::losing_scores_k;

const TEXT: &str = "\
uniform 3 2
# each line is one arc; the last vertex loses
2 1
1 3
3 2
";

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let instance = parse_instance(TEXT)?;
    let Instance::Uniform(h) = &instance else {
        return Err("expected a uniform instance".into());
    };
    let (per_vertex, _) = losing_scores_k(h)?;
    println!("losing scores by vertex: {per_vertex:?}");

    let canonical = serialize_instance(&instance);
    print!("{canonical}");
    assert_eq!(serialize_instance(&parse_instance(&canonical)?), canonical);

    match parse_instance("bipartite 2 2 2 2\nu1 u2 v1 v2\nu2 u1 v2 v1\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => return Err("a surplus arc should be rejected".into()),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
