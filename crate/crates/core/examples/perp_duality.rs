//! A code is I-perfect exactly when its dual is perfect for the
//! complementary ideal in the dual pomset.

use pomset_block::block_space::{BlockSpace, DEFAULT_CAP};
use pomset_block::codes::{self, Code};
use pomset_block::format::parse_ideal;

fn main() -> pomset_block::error::Result<()> {
    let space = BlockSpace::chain(5, vec![1, 1])?;
    let i = parse_ideal(&space, "2/1")?;
    for g in [[0, 1], [1, 1], [1, 0]] {
        let code = Code::span(&space, &[space.vector(&g)?], DEFAULT_CAP)?;
        let r = codes::check_perp_duality(&code, &i, DEFAULT_CAP)?;
        let dual: Vec<String> = r.dual.words().iter().map(|w| format!("({w})")).collect();
        println!(
            "C = span({} {}): I-perfect {}, dual {} is {}-perfect {}, agree {}",
            g[0],
            g[1],
            r.code_perfect.is_perfect(),
            dual.join(" "),
            r.complement,
            r.dual_perfect.is_perfect(),
            r.holds()
        );
    }
    Ok(())
}
