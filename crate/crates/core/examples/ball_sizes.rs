//! I-ball and r-ball sizes by formula and by enumeration.

use pomset_block::balls;
use pomset_block::block_space::{BlockSpace, DEFAULT_CAP};
use pomset_block::format::parse_ideal;

fn main() -> pomset_block::error::Result<()> {
    let space = BlockSpace::chain(5, vec![1, 1])?;
    let zero = space.zero();
    for lit in ["", "1/1", "2/1", "2/1 1/2", "2/1 2/2"] {
        let i = parse_ideal(&space, lit)?;
        let formula = balls::i_ball_cardinality(&space, &i)?;
        let found = balls::enumerate_i_ball(&space, &zero, &i, DEFAULT_CAP)?.len();
        let sphere = balls::s_i_cardinality_formula(&space, &i)?;
        println!("I = {:<12} |B_I| = {formula:>2} (scan {found:>2})  |S_I| = {sphere}", i.to_string());
    }
    for r in 0..=space.max_weight() {
        let formula = balls::r_ball_cardinality(&space, r)?;
        let found = balls::enumerate_r_ball(&space, &zero, r, DEFAULT_CAP)?.len();
        println!("r = {r}  |B_r| = {formula:>2} (scan {found:>2})");
    }

    let partial = parse_ideal(&space, "2/1 1/2")?;
    if let Some((u, v)) = balls::nonlinearity_witness(&space, &partial)? {
        println!("B_I for I = {partial} is not a subgroup: {u} + {v} = {} lies outside", space.add(&u, &v));
    }
    let full = parse_ideal(&space, "2/1")?;
    let report = balls::full_count_ball_structure(&space, &full, DEFAULT_CAP)?;
    println!(
        "I = {full}: submodule {}, {} cosets, perp equals dual ball {}",
        report.submodule, report.classes, report.perp_is_dual_ball
    );
    Ok(())
}
