//! Packing radius, Singleton bound, MDS codes and the four-way duality on
//! chain pomsets.

use pomset_block::block_space::{BlockSpace, DEFAULT_CAP};
use pomset_block::codes::chain;
use pomset_block::codes::{Code, Metric};

fn main() -> pomset_block::error::Result<()> {
    let space = BlockSpace::chain(5, vec![1, 1])?;
    for g in [[1, 1], [1, 0]] {
        let code = Code::span(&space, &[space.vector(&g)?], DEFAULT_CAP)?;
        let rep = chain::singleton_check(&code)?;
        let four = chain::duality_equivalence(&code, DEFAULT_CAP)?;
        println!(
            "span({} {}): d = {}, d_P = {}, bound {} <= {}, MDS {}, packing radius {} (formula {}), four-way {:?}",
            g[0],
            g[1],
            rep.distance,
            code.min_distance(Metric::PosetBlock)?,
            rep.lhs,
            rep.rhs,
            rep.is_mds(),
            chain::packing_radius_bruteforce(&code, DEFAULT_CAP)?,
            chain::packing_radius_chain_formula(&code)?,
            four.statements()
        );
    }

    let three = BlockSpace::chain(5, vec![1, 1, 1])?;
    let (unit, block) = chain::repetition_codes(&three, DEFAULT_CAP)?;
    println!(
        "unit repetition in Z_5^3: d = {}, MDS {}",
        unit.min_distance(Metric::PomsetBlock)?,
        chain::is_mds(&unit)?
    );
    println!(
        "block repetition in Z_5^{}: d = {}, MDS {}",
        block.space().len(),
        block.min_distance(Metric::PomsetBlock)?,
        chain::is_mds(&block)?
    );
    let bracket = chain::mds_distance_bracket(&unit)?;
    println!(
        "distance bracket: {} <= {} <= {}",
        bracket.lower_k / bracket.k,
        bracket.distance_k / bracket.k,
        bracket.upper_k / bracket.k
    );
    Ok(())
}
