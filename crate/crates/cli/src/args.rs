//! Flag surface of the binary. Everything here is plumbing; the library
//! crate owns the mathematics.

use std::path::PathBuf;

use clap::{Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "contact-surgery",
    version,
    about = "Exact contact-surgery calculations with deterministic JSON output"
)]
pub struct Cli {
    /// Render a human-readable table instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,

    /// Emit JSON. This is the default; the flag lets scripts be explicit.
    #[arg(long, global = true, conflicts_with = "pretty")]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Candidate structures in one family, with counting bounds and all
    /// pairwise verdicts.
    Brieskorn {
        /// Family index, at least 2.
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
    /// Run the non-isotopy test on a comparison document.
    Distinguish {
        /// Path to a comparison JSON file.
        #[arg(long)]
        input: PathBuf,
    },
    /// Boundary slopes of the three exceptional-fiber tori.
    Slopes {
        /// Family index, at least 2.
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        /// Interior twist of the first fiber neighborhood, negative.
        #[arg(long, allow_negative_numbers = true)]
        n1: i64,
        /// Interior twist of the second fiber neighborhood, negative.
        #[arg(long, allow_negative_numbers = true)]
        n2: i64,
        /// Interior twist of the third fiber neighborhood, negative.
        #[arg(long, allow_negative_numbers = true)]
        n3: i64,
    },
    /// First homology from a linking matrix or a torus automorphism.
    Homology {
        /// Path to a linking-matrix JSON file.
        #[arg(long, required_unless_present = "mapping_torus", conflicts_with = "mapping_torus")]
        input: Option<PathBuf>,
        /// Automorphism matrix entries a,b,c,d in row-major order.
        #[arg(long, value_name = "A,B,C,D", allow_hyphen_values = true)]
        mapping_torus: Option<String>,
    },
    /// Check the handle-model identities and sample both hypersurfaces.
    VerifyHandle {
        /// Points per hypersurface scan.
        #[arg(long, default_value_t = 20)]
        samples: usize,
        /// Cutoff parameter, an integer or p/q fraction greater than 1.
        #[arg(long = "A", default_value = "2", value_name = "P/Q")]
        param: String,
    },
    /// Smith normal form of an integer matrix.
    Snf {
        /// Path to a matrix JSON file.
        #[arg(long)]
        input: PathBuf,
    },
}
