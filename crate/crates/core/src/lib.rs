pub mod balls;
pub mod block_space;
pub mod cli;
pub mod codes;
pub mod count;
pub mod error;
pub mod format;
pub mod multiset;
pub mod pomset;
pub mod weight_dist;
