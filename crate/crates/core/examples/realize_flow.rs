// Realizes losing quotas with a max-flow assignment of losers, and shows
// the certificate returned when the quotas are infeasible.

use hypertourney::{
    realize_flow, realize_flow_k, BipartiteParams, FlowOutcome, FlowOutcomeK, UniformParams,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let params = BipartiteParams::new(4, 3, 2, 2)?;
    match realize_flow(params, &[1, 2, 3, 6], &[1, 2, 3])? {
        FlowOutcome::Feasible(result) => {
            println!("feasible, {} arcs", result.hypertournament.arcs().len())
        }
        FlowOutcome::Infeasible(why) => return Err(format!("unexpected: {why}").into()),
    }

    let params = BipartiteParams::new(3, 3, 2, 2)?;
    if let FlowOutcome::Infeasible(why) = realize_flow(params, &[0, 0, 4], &[0, 0, 5])? {
        println!("infeasible: {why}");
    }

    let uniform = UniformParams::new(4, 3)?;
    if let FlowOutcomeK::Feasible(h) = realize_flow_k(uniform, &[0, 1, 1, 2])? {
        for arc in h.arcs() {
            println!("{arc}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
