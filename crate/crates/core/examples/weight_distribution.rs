//! Weight distribution of a small space, by formula and by scan.

use pomset_block::block_space::{BlockSpace, DEFAULT_CAP};
use pomset_block::weight_dist;

fn main() -> pomset_block::error::Result<()> {
    let space = BlockSpace::with_order(6, vec![2, 1, 2], &[(1, 3)])?;
    let formula = weight_dist::weight_distribution_formula(&space)?;
    let scanned = weight_dist::weight_distribution_bruteforce(&space, DEFAULT_CAP)?;
    print!("{}", formula.to_tsv());
    println!("formula matches scan: {}", formula == scanned);

    let chain = BlockSpace::chain(6, vec![2, 1, 2])?;
    let closed: Vec<u128> = (0..=chain.max_weight())
        .map(|r| weight_dist::chain_a_r(&chain, r))
        .collect::<Result<_, _>>()?;
    println!("chain closed form: {closed:?}");
    println!("|D_r^2| in Z_6: {:?}", (0..=3).map(|r| weight_dist::d_r_count(6, 2, r)).collect::<Result<Vec<_>, _>>()?);
    Ok(())
}
