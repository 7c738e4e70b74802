//! Building perfect codes for full-count and partial-count ideals and
//! checking them by partition scans.

use pomset_block::block_space::{BlockSpace, DEFAULT_CAP};
use pomset_block::codes::{self, Code, PackingShape};
use pomset_block::error::Error;
use pomset_block::format::parse_ideal;

fn show(space: &BlockSpace, lit: &str) -> pomset_block::error::Result<()> {
    let i = parse_ideal(space, lit)?;
    let code = if i.is_full_count() {
        codes::construct_perfect_full(space, &i, DEFAULT_CAP)?
    } else {
        codes::construct_perfect_partial(space, &i, DEFAULT_CAP)?
    };
    let cert = codes::verify_perfect(&code, &PackingShape::Ideal(i.clone()), DEFAULT_CAP)?;
    println!(
        "m={} blocks {:?} I={i}: |C| = {} (expected {}), perfect {}",
        space.m(),
        space.blocks(),
        code.len(),
        codes::constructed_size(space, &i)?,
        cert.is_perfect()
    );
    Ok(())
}

fn main() -> pomset_block::error::Result<()> {
    show(&BlockSpace::chain(5, vec![1, 1])?, "2/1")?;
    show(&BlockSpace::antichain(9, vec![1])?, "1/1")?;
    show(&BlockSpace::antichain(9, vec![2])?, "1/1")?;
    show(&BlockSpace::antichain(9, vec![1, 1])?, "4/1 1/2")?;

    let z7 = BlockSpace::antichain(7, vec![1])?;
    match codes::construct_perfect_partial(&z7, &parse_ideal(&z7, "1/1")?, DEFAULT_CAP) {
        Err(e @ Error::DivisibilityFails { .. }) => println!("Z_7: {e}"),
        other => println!("unexpected: {other:?}"),
    }

    let chain = BlockSpace::chain(5, vec![1, 1])?;
    let bad = Code::explicit(&chain, vec![chain.zero(), chain.vector(&[1, 0])?])?;
    let cert = codes::verify_perfect(&bad, &PackingShape::Ideal(parse_ideal(&chain, "2/1")?), DEFAULT_CAP)?;
    println!("{{0, (1,0)}}: disjoint {}, witness {:?}", cert.disjoint, cert.witness);
    Ok(())
}
