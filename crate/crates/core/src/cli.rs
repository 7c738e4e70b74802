//! Command-line front end. Every command returns its output and exit code
//! instead of printing, so it can be driven from tests.
//!
//! Exit codes: 0 when the property holds, 1 when it fails (with a
//! certificate on stdout), 2 on invalid input.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::balls::{self, BallKind, BallSpec};
use crate::block_space::{BlockSpace, DEFAULT_CAP};
use crate::codes::chain;
use crate::codes::{self, Code, PackingShape, Witness};
use crate::error::{Error, Result};
use crate::format;
use crate::weight_dist;

const GRAMMAR: &str = "\
Space file:  lines `m <int>`, `blocks <k1> ... <kn>`, optional `order i<j ...`;
             `#` starts a comment. Indices are 1-based.
Vector:      N residues separated by spaces, e.g. `0 3 1`.
Ideal:       count/index tokens, e.g. `3/1 1/3`; omitted indices have count 0.
Code file:   `explicit` then one vector per line, or `linear` then generator rows.";

#[derive(Debug, Parser)]
#[command(name = "pomset-block", version, about = "Pomset block metric toolkit", after_help = GRAMMAR)]
pub struct Cli {
    /// Largest number of vectors any exhaustive scan may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    pub cap: u128,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Weight of a vector.
    Weight {
        space: PathBuf,
        /// Vector residues.
        #[arg(required = true, allow_negative_numbers = true, num_args = 1..)]
        vector: Vec<String>,
        /// Report the poset block weight instead.
        #[arg(long)]
        poset: bool,
    },
    /// Compare every counting formula with enumeration on one space.
    Selftest { space: PathBuf },
    /// List ideals of the space's pomset.
    Ideals {
        space: PathBuf,
        /// Only ideals of this cardinality.
        #[arg(long)]
        card: Option<u64>,
        /// Only ideals with this many maximal elements (needs --card).
        #[arg(long, requires = "card")]
        maxcount: Option<usize>,
    },
    /// Size of an I-ball or r-ball.
    Ballsize {
        space: PathBuf,
        #[command(flatten)]
        shape: ShapeArgs,
        /// Count by scanning the space instead of by formula.
        #[arg(long)]
        enumerate: bool,
        /// Centre for --enumerate.
        #[arg(long, allow_hyphen_values = true)]
        center: Option<String>,
        /// Sphere instead of ball.
        #[arg(long)]
        sphere: bool,
    },
    /// Weight distribution as `r<TAB>A_r` rows.
    Wdist {
        space: PathBuf,
        /// Count by scanning the space instead of by formula.
        #[arg(long)]
        oracle: bool,
    },
    /// Construct or verify perfect codes.
    #[command(subcommand)]
    Perfect(PerfectCommand),
    /// Singleton bound and MDS checks on a chain.
    #[command(subcommand)]
    Mds(MdsCommand),
    /// Dual code, written as a code file for the dual space.
    Dual { space: PathBuf, code: PathBuf },
    /// Packing radius by search and by the chain formula.
    Packrad { space: PathBuf, code: PathBuf },
    /// The four equivalent MDS/perfect statements for a code and its dual.
    Duality4 { space: PathBuf, code: PathBuf },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct ShapeArgs {
    /// Ideal literal, e.g. `2/1 1/2`.
    #[arg(long, allow_hyphen_values = true)]
    ideal: Option<String>,
    #[arg(long)]
    radius: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum PerfectCommand {
    /// Print a code that is perfect for the ideal.
    Construct {
        space: PathBuf,
        #[arg(long)]
        ideal: String,
    },
    /// Check that balls around the codewords partition the space.
    Verify {
        space: PathBuf,
        code: PathBuf,
        #[command(flatten)]
        shape: ShapeArgs,
    },
}

#[derive(Debug, Subcommand)]
pub enum MdsCommand {
    /// Singleton bound report; exit 0 iff the code is MDS.
    Check { space: PathBuf, code: PathBuf },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self::with(stdout, true)
    }

    fn with(stdout: String, holds: bool) -> Self {
        Self {
            stdout,
            stderr: String::new(),
            code: if holds { 0 } else { 1 },
        }
    }

    fn invalid(msg: String) -> Self {
        Self {
            stdout: String::new(),
            stderr: msg,
            code: 2,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome::invalid(text)
            } else {
                Outcome::ok(text)
            }
        }
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    match dispatch(cli) {
        Ok(o) => o,
        Err(e) => Outcome::invalid(format!("error: {e}\n")),
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidSpace(format!("cannot read {}: {e}", path.display())))
}

fn load_space(path: &Path) -> Result<BlockSpace> {
    format::parse_space(&read(path)?)
}

fn load_code(space: &BlockSpace, path: &Path, cap: u128) -> Result<Code> {
    format::parse_code(space, &read(path)?, cap)
}

fn shape(space: &BlockSpace, args: &ShapeArgs) -> Result<PackingShape> {
    match (&args.ideal, args.radius) {
        (Some(lit), _) => Ok(PackingShape::Ideal(format::parse_ideal(space, lit)?)),
        (None, Some(r)) => Ok(PackingShape::Radius(r)),
        (None, None) => unreachable!("clap enforces one of --ideal/--radius"),
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let cap = cli.cap;
    match &cli.command {
        Command::Weight {
            space,
            vector,
            poset,
        } => {
            let s = load_space(space)?;
            let v = format::parse_vector(&s, &vector.join(" "))?;
            let w = if *poset { s.poset_weight(&v) } else { s.weight(&v) };
            Ok(Outcome::ok(format!("{w}\n")))
        }
        Command::Selftest { space } => selftest(&load_space(space)?, cap),
        Command::Ideals {
            space,
            card,
            maxcount,
        } => {
            let s = load_space(space)?;
            let p = s.pomset();
            let list = match (card, maxcount) {
                (Some(t), Some(j)) => p.ideals_by_maximal_count(*t, *j)?,
                (Some(t), None) => p.ideals_of_cardinality(*t)?,
                _ => p.all_ideals(),
            };
            let mut out = String::new();
            for i in &list {
                let maxes = p.maximal_elements(i).root_set().len();
                writeln!(out, "{i}\t{}\t{maxes}", i.cardinality()).expect("string write");
            }
            Ok(Outcome::ok(out))
        }
        Command::Ballsize {
            space,
            shape: sh,
            enumerate,
            center,
            sphere,
        } => {
            let s = load_space(space)?;
            let shape = shape(&s, sh)?;
            let centre = match center {
                Some(c) => format::parse_vector(&s, c)?,
                None => s.zero(),
            };
            let n = if *enumerate {
                let found = match (&shape, sphere) {
                    (PackingShape::Ideal(i), true) => balls::enumerate_i_sphere(&s, &centre, i, cap)?,
                    (PackingShape::Radius(r), true) => balls::enumerate_r_sphere(&s, &centre, *r, cap)?,
                    (PackingShape::Ideal(i), false) => BallSpec {
                        center: centre,
                        kind: BallKind::Ideal(i.clone()),
                    }
                    .enumerate(&s, cap)?,
                    (PackingShape::Radius(r), false) => BallSpec {
                        center: centre,
                        kind: BallKind::Radius(*r),
                    }
                    .enumerate(&s, cap)?,
                };
                found.len() as u128
            } else {
                match (&shape, sphere) {
                    (PackingShape::Ideal(i), true) => balls::s_i_cardinality_formula(&s, i)?,
                    (PackingShape::Radius(r), true) => balls::r_sphere_cardinality(&s, *r)?,
                    (PackingShape::Ideal(i), false) => balls::i_ball_cardinality(&s, i)?,
                    (PackingShape::Radius(r), false) => balls::r_ball_cardinality(&s, *r)?,
                }
            };
            Ok(Outcome::ok(format!("{n}\n")))
        }
        Command::Wdist { space, oracle } => {
            let s = load_space(space)?;
            let d = if *oracle {
                weight_dist::weight_distribution_bruteforce(&s, cap)?
            } else {
                weight_dist::weight_distribution_formula(&s)?
            };
            Ok(Outcome::ok(d.to_tsv()))
        }
        Command::Perfect(PerfectCommand::Construct { space, ideal }) => {
            let s = load_space(space)?;
            let i = format::parse_ideal(&s, ideal)?;
            let c = if i.is_full_count() {
                codes::construct_perfect_full(&s, &i, cap)?
            } else {
                codes::construct_perfect_partial(&s, &i, cap)?
            };
            Ok(Outcome::ok(format::write_code(&c)))
        }
        Command::Perfect(PerfectCommand::Verify {
            space,
            code,
            shape: sh,
        }) => {
            let s = load_space(space)?;
            let c = load_code(&s, code, cap)?;
            let cert = codes::verify_perfect(&c, &shape(&s, sh)?, cap)?;
            let mut out = format!(
                "perfect\t{}\ndisjoint\t{}\ncovering\t{}\n",
                cert.is_perfect(),
                cert.disjoint,
                cert.covering
            );
            match &cert.witness {
                Some(Witness::Overlap {
                    vector,
                    first,
                    second,
                }) => writeln!(out, "overlap\t{vector}\tballs at {first} and {second}"),
                Some(Witness::Uncovered(v)) => writeln!(out, "uncovered\t{v}"),
                None => Ok(()),
            }
            .expect("string write");
            Ok(Outcome::with(out, cert.is_perfect()))
        }
        Command::Mds(MdsCommand::Check { space, code }) => {
            let s = load_space(space)?;
            let c = load_code(&s, code, cap)?;
            let rep = chain::singleton_check(&c)?;
            let prefix: Vec<String> = rep.prefix.iter().map(|i| i.to_string()).collect();
            let out = format!(
                "distance\t{}\nprefix\t{{{}}}\nlhs\t{}\nrhs\t{}\nbound_holds\t{}\nmds\t{}\n",
                rep.distance,
                prefix.join(", "),
                rep.lhs,
                rep.rhs,
                rep.holds(),
                rep.is_mds()
            );
            Ok(Outcome::with(out, rep.is_mds()))
        }
        Command::Dual { space, code } => {
            let s = load_space(space)?;
            let c = load_code(&s, code, cap)?;
            let d = codes::dual_code(&c, cap)?;
            let mut out = String::new();
            for line in format::write_space(d.space()).lines() {
                writeln!(out, "# {line}").expect("string write");
            }
            out.push_str(&format::write_code(&d));
            Ok(Outcome::ok(out))
        }
        Command::Packrad { space, code } => {
            let s = load_space(space)?;
            let c = load_code(&s, code, cap)?;
            let brute = chain::packing_radius_bruteforce(&c, cap)?;
            let mut out = format!("bruteforce\t{brute}\n");
            let holds = match chain::packing_radius_chain_formula(&c) {
                Ok(f) => {
                    writeln!(out, "formula\t{f}").expect("string write");
                    f == brute
                }
                Err(Error::NotAChain) => true,
                Err(e) => return Err(e),
            };
            Ok(Outcome::with(out, holds))
        }
        Command::Duality4 { space, code } => {
            let s = load_space(space)?;
            let c = load_code(&s, code, cap)?;
            let f = chain::duality_equivalence(&c, cap)?;
            let out = format!(
                "ideal\t{}\ncomplement\t{}\nmds\t{}\nperfect\t{}\ndual_perfect\t{}\ndual_mds\t{}\nall_equal\t{}\n",
                f.ideal,
                f.complement,
                f.mds,
                f.perfect,
                f.dual_perfect,
                f.dual_mds,
                f.all_equal()
            );
            Ok(Outcome::with(out, f.all_equal()))
        }
    }
}

struct Table {
    out: String,
    failures: usize,
}

impl Table {
    fn row(&mut self, check: impl std::fmt::Display, formula: u128, oracle: u128) {
        self.row_with(check, formula, oracle, formula == oracle);
    }

    fn row_with(&mut self, check: impl std::fmt::Display, formula: u128, oracle: u128, pass: bool) {
        if !pass {
            self.failures += 1;
        }
        let verdict = if pass { "pass" } else { "FAIL" };
        writeln!(self.out, "{check}\t{formula}\t{oracle}\t{verdict}").expect("string write");
    }
}

fn selftest(s: &BlockSpace, cap: u128) -> Result<Outcome> {
    let mut t = Table {
        out: String::from("check\tformula\toracle\tverdict\n"),
        failures: 0,
    };
    let census = balls::ideal_census(s, cap)?;
    let ideals = s.pomset().all_ideals();
    for i in &ideals {
        let oracle = census.get(i.multiset()).copied().unwrap_or(0);
        t.row(format!("sphere I={i}"), balls::s_i_cardinality_formula(s, i)?, oracle);
    }
    for i in &ideals {
        let mut oracle = 0;
        for (j, n) in &census {
            if j.is_submset(i.multiset())? {
                oracle += n;
            }
        }
        t.row(format!("ball I={i}"), balls::i_ball_cardinality(s, i)?, oracle);
    }
    let brute = weight_dist::weight_distribution_bruteforce(s, cap)?;
    let mut cumulative = 0;
    for r in 0..=s.max_weight() {
        let shell = brute.shells()[r as usize];
        cumulative += shell;
        t.row(format!("sphere r={r}"), balls::r_sphere_cardinality(s, r)?, shell);
        t.row(format!("ball r={r}"), balls::r_ball_cardinality(s, r)?, cumulative);
    }
    let mut lens: Vec<usize> = s.blocks().to_vec();
    lens.sort_unstable();
    lens.dedup();
    for k in lens {
        let single = BlockSpace::antichain(s.m(), vec![k])?;
        let shells = weight_dist::weight_distribution_bruteforce(&single, cap)?;
        for r in 0..=s.h() {
            t.row(
                format!("D_r^k r={r} k={k}"),
                weight_dist::d_r_count(s.m(), k, r)?,
                shells.shells()[r as usize],
            );
        }
    }
    for r in 1..=s.max_weight() {
        t.row(format!("A_r r={r}"), weight_dist::a_r_formula(s, r)?, brute.shells()[r as usize]);
    }
    if s.pomset().is_chain() {
        for r in 0..=s.max_weight() {
            t.row(format!("chain A_r r={r}"), weight_dist::chain_a_r(s, r)?, brute.shells()[r as usize]);
        }
    }
    if s.has_unit_blocks() {
        let same = weight_dist::pw_distribution_equals_pomset(s, cap)?;
        t.row_with("pw distribution", 1, u128::from(same), same);
    }
    for i in ideals.iter().filter(|i| i.is_full_count()) {
        let r = balls::full_count_ball_structure(s, i, cap)?;
        t.row_with(format!("full-count ball I={i}"), r.formula_size, r.ball_size, r.holds());
    }
    let verdict = if t.failures == 0 {
        "# all pass\n".to_string()
    } else {
        format!("# {} failing\n", t.failures)
    };
    t.out.push_str(&verdict);
    Ok(Outcome::with(t.out, t.failures == 0))
}
