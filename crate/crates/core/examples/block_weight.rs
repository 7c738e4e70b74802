//! Pomset block weight, poset block weight and pw weight of a few vectors.

use pomset_block::block_space::BlockSpace;

fn main() -> pomset_block::error::Result<()> {
    let space = BlockSpace::with_order(7, vec![2, 3, 4, 4, 3, 2], &[(1, 2), (2, 4), (1, 4), (5, 6)])?;
    let v = space.vector(&[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 2, 0])?;
    println!("v = {v}");
    println!("block support       {}", space.support(&v));
    println!("pomset block weight {}", space.weight(&v));
    println!("poset block weight  {}", space.poset_weight(&v));

    let chain = BlockSpace::chain(5, vec![1, 1])?;
    for raw in [[0, 1], [3, 1], [2, 0], [4, 4]] {
        let x = chain.vector(&raw)?;
        println!(
            "Z_5^2 chain: w({x}) = {}, pw({x}) = {}",
            chain.weight(&x),
            chain.pw_weight(&x)?
        );
    }
    let u = chain.vector(&[1, 2])?;
    let w = chain.vector(&[4, 2])?;
    println!("d(({u}), ({w})) = {}", chain.distance(&u, &w)?);
    Ok(())
}
