use std::path::PathBuf;

use clap::{Parser, ValueEnum};

/// Seed used when neither `--seed` nor `PERMUTO_SEED` is given.
pub const DEFAULT_SEED: u64 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Validate,
    Flats,
    Bergman,
    Indeg,
    Chi,
    Snapper,
    Hstar,
    Macaulay,
    Omega,
    Numdim,
    Dilworth,
    Dhr,
    Progenitor,
    Selftest,
}

impl Command {
    pub fn name(self) -> String {
        self.to_possible_value()
            .map(|v| v.get_name().to_string())
            .unwrap_or_default()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Level {
    #[default]
    Fast,
    Full,
}

#[derive(Clone, Debug, Parser)]
#[command(name = "permuto", version, about = "Matroid Euler characteristics on the permutohedral variety")]
pub struct Cli {
    pub command: Command,

    /// Matroid: `uniform:r,n`, `U(r,n)`, `fano`, `directsum(E1,E2)` or `file:PATH`.
    #[arg(long)]
    pub matroid: Option<String>,

    /// Polytope expression; `matroid:M` refers to the `--matroid` input.
    #[arg(long)]
    pub polytope: Option<String>,

    /// Power `a` of the line bundle.
    #[arg(long)]
    pub power: Option<u64>,

    #[arg(long, env = "PERMUTO_SEED", default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Explicit weight vector instead of a sampled one, e.g. `0,1,3`.
    #[arg(long, allow_hyphen_values = true)]
    pub weight: Option<String>,

    /// Comma-separated integer vector (for `macaulay`).
    #[arg(long)]
    pub vector: Option<String>,

    /// Semicolon-separated comma lists (for `dhr`), e.g. `1,2;2,3`.
    #[arg(long)]
    pub sets: Option<String>,

    /// Multilinear polynomial (for `progenitor`), e.g. `1 + a1 + a2`.
    #[arg(long, allow_hyphen_values = true)]
    pub poly: Option<String>,

    /// Number of variables of `--poly`; defaults to the largest index used.
    #[arg(long)]
    pub ell: Option<usize>,

    /// Self-test level.
    #[arg(long, value_enum, default_value_t = Level::Fast)]
    pub level: Level,

    /// Also write the report to this file.
    #[arg(long)]
    pub out: Option<PathBuf>,

    #[arg(long)]
    pub verbose: bool,
}
