//! Multiset operations and ideals of a five-element pomset of height 3.

use pomset_block::multiset::Multiset;
use pomset_block::pomset::Pomset;

fn main() -> pomset_block::error::Result<()> {
    let p = Pomset::new(5, 3, &[(1, 3), (2, 4), (2, 5)])?;
    let ms = |lit: &str| Multiset::parse(5, 3, lit);

    let i1 = ms("2/1")?;
    let i3 = ms("3/1 1/3")?;
    let i6 = ms("3/1 3/2 2/3 2/4")?;
    println!("<{{2/3}}>       = {}", p.generate(&ms("2/3")?)?);
    println!("I1 (+) I3      = {}", i1.sum(&i3)?);
    println!("I1 (-) I3      = {}", i1.diff(&i3)?);
    println!("I3 union I6    = {}", i3.union(&i6)?);
    println!("I3 meet I6     = {}", i3.intersection(&i6)?);

    println!("minimal elements of the dual: {:?}", p.dual().minimal_elements());
    println!("ideals of cardinality 3:");
    for ideal in p.ideals_of_cardinality(3)? {
        println!("  {ideal}  maximal part {}", p.maximal_elements(&ideal));
    }
    let i = p.ideal(i3)?;
    println!("complement of {i} in the dual: {}", p.complement_ideal(&i)?);
    Ok(())
}
