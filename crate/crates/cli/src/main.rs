//! `geom3`: command-line front end. Exit 0 on success, 1 on domain errors, 2 on schema errors.

mod args;
mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "geom3",
    version,
    about = "Isometry groups of quotients of the Thurston geometries"
)]
pub struct Cli {
    /// Emit compact JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Heisenberg lattices and their quotients.
    Nil {
        #[command(subcommand)]
        op: NilOp,
    },
    /// Sol lattices Γ_{Aⁿ}.
    Sol {
        #[command(subcommand)]
        op: SolOp,
    },
    /// Isometries of the hyperbolic plane.
    Hyp {
        #[command(subcommand)]
        op: HypOp,
    },
    /// Sasaki geometry of the unit tangent bundle and S²×ℝ groups.
    Fiber {
        #[command(subcommand)]
        op: FiberOp,
    },
    /// Crystallographic groups.
    Euclid {
        #[command(subcommand)]
        op: EuclidOp,
    },
    /// Spherical and S²×ℝ lookup tables.
    Lookup(LookupArgs),
    /// Higher-rank lattice actions on a geometric quotient.
    Zimmer(ZimmerArgs),
    /// Run the embedded golden suite.
    Selfcheck,
}

/// A Nil lattice, either a preset or explicit parameters.
#[derive(Args, Debug, Clone)]
pub struct NilLatticeArgs {
    /// `HZ`, `Gp:<p>` or `hex:<p>`.
    #[arg(long, conflicts_with_all = ["u", "v", "r", "s", "n"])]
    pub preset: Option<String>,
    /// First planar generator `x,y`.
    #[arg(long, requires = "v")]
    pub u: Option<String>,
    /// Second planar generator `x,y`.
    #[arg(long, requires = "u")]
    pub v: Option<String>,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub r: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub s: String,
    #[arg(long, default_value_t = 1)]
    pub n: u64,
}

#[derive(Subcommand, Debug)]
pub enum NilOp {
    /// Validate and print the lattice.
    Lattice(NilLatticeArgs),
    /// Generator of the lattice's centre.
    Center(NilLatticeArgs),
    /// Normalizer in H_ℝ.
    Normalizer(NilLatticeArgs),
    /// Point group of the planar lattice.
    PointGroup(NilLatticeArgs),
    /// Isometry group of H_ℝ/L.
    Iso {
        #[command(flatten)]
        lattice: NilLatticeArgs,
        /// Adjoin lifts of the full planar point group.
        #[arg(long)]
        with_point_group: bool,
    },
    /// Discrete projection versus a fixed point or line.
    Dichotomy {
        /// `ROT[:x,y,z]` with ROT one of id, q1..q3, h1..h5, optionally suffixed by f (reflection).
        #[arg(long = "gen", required = true, allow_hyphen_values = true)]
        gens: Vec<String>,
        #[arg(long, default_value_t = geom3::nil::DEFAULT_WORD_BOUND)]
        word_bound: usize,
    },
}

#[derive(Args, Debug, Clone)]
pub struct SolLatticeArgs {
    /// `fib` for A = [[2,1],[1,1]].
    #[arg(long, conflicts_with = "matrix")]
    pub preset: Option<String>,
    /// Row-major `a,b,c,d`.
    #[arg(long, allow_hyphen_values = true)]
    pub matrix: Option<String>,
    #[arg(long, default_value_t = 1)]
    pub power: u64,
}

#[derive(Subcommand, Debug)]
pub enum SolOp {
    Lattice(SolLatticeArgs),
    /// Λ_n, the translation part of the normalizer.
    Normalizer(SolLatticeArgs),
    /// Isometry group (Λ_n/ℤ²) ⋊ ℤ_n.
    Iso(SolLatticeArgs),
    /// Evidence that the centralizer is trivial.
    Centralizer(SolLatticeArgs),
}

#[derive(Subcommand, Debug)]
pub enum HypOp {
    /// Elliptic / parabolic / hyperbolic, with the fixed set.
    Classify {
        /// Row-major `a,b,c,d`, positive determinant.
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
    /// Whether two isometries commute, and whether their fixed sets agree.
    Commute {
        #[arg(long, allow_hyphen_values = true)]
        m1: String,
        #[arg(long, allow_hyphen_values = true)]
        m2: String,
    },
    /// Centralizer type in PSL₂(ℝ).
    Centralizer {
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
    /// Isometry-group verdict for finite-volume ℍⁿ quotients.
    Hn {
        #[arg(long)]
        dim: u32,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum QuotientKind {
    Psl2,
    H2xr,
    Sl2,
}

#[derive(Subcommand, Debug)]
pub enum FiberOp {
    /// Ψ(X_j) for the standard basis of sl₂(ℝ).
    Frame,
    /// φ(m) = (m·i, 1/(ci+d)²).
    Embed {
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
    /// Christoffel symbol Γᵏᵢⱼ of ℍ² at a point.
    Christoffel {
        /// `re,im`.
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        i: u8,
        j: u8,
        k: u8,
    },
    /// Sasaki norm and horizontal/vertical split of (X, Z) at (z, w).
    Sasaki {
        #[arg(long, default_value = "0,1", allow_hyphen_values = true)]
        z: String,
        #[arg(long, default_value = "1,0", allow_hyphen_values = true)]
        w: String,
        #[arg(long = "x", allow_hyphen_values = true)]
        x: String,
        #[arg(long = "zv", allow_hyphen_values = true)]
        zv: String,
    },
    /// Shape of Iso for PSL₂(ℝ)-, ℍ²×ℝ- and SL₂~-quotients.
    Quotient {
        #[arg(long, value_enum)]
        kind: QuotientKind,
    },
    /// Decompose a discrete subgroup of Isom(S²×ℝ).
    S2r {
        /// `ax,ay,az:angle:shift[:flip]`, flip ∈ {1, -1}.
        #[arg(long = "gen", required = true, allow_hyphen_values = true)]
        gens: Vec<String>,
    },
}

#[derive(Args, Debug, Clone)]
pub struct CrystalArgs {
    #[arg(long)]
    pub dim: usize,
    /// Point-group generator, row-major integers; repeatable.
    #[arg(long = "gen", allow_hyphen_values = true)]
    pub gens: Vec<String>,
    /// Translation lattice vector; repeatable (default: the standard lattice).
    #[arg(long = "lattice", allow_hyphen_values = true)]
    pub lattice: Vec<String>,
}

#[derive(Subcommand, Debug)]
pub enum EuclidOp {
    /// Translation rank and volume verdict.
    Volume(CrystalArgs),
    /// First Betti number and identity component.
    Betti(CrystalArgs),
    /// Isometry group of the quotient.
    Iso(CrystalArgs),
}

#[derive(Args, Debug)]
pub struct LookupArgs {
    /// Table family; omit with --dump.
    #[arg(required_unless_present = "dump")]
    pub family: Option<String>,
    /// Print the whole table.
    #[arg(long)]
    pub dump: bool,
}

#[derive(Args, Debug)]
pub struct ZimmerArgs {
    #[arg(long)]
    pub geometry: String,
    /// Semisimple factors, e.g. "SL(3,R)" or "SO(2,2), SO(4)".
    #[arg(long)]
    pub factors: String,
    #[arg(long, conflicts_with = "uniform")]
    pub nonuniform: bool,
    /// The default.
    #[arg(long)]
    pub uniform: bool,
    /// Identity component of Iso(X/G); required for s3 and s2xr.
    #[arg(long)]
    pub identity_component: Option<String>,
    /// Nil preset (HZ, Gp:p, hex:p) or Sol preset (fib).
    #[arg(long)]
    pub preset: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub matrix: Option<String>,
    #[arg(long, default_value_t = 1)]
    pub power: u64,
    #[arg(long)]
    pub dim: Option<usize>,
    #[arg(long = "gen", allow_hyphen_values = true)]
    pub gens: Vec<String>,
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let json = argv.iter().any(|a| a == "--json");
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            if json {
                let detail = e
                    .kind()
                    .as_str()
                    .map(str::to_string)
                    .unwrap_or_else(|| e.to_string().trim().to_string());
                println!("{}", commands::envelope("schema", &detail));
            } else {
                let _ = e.print();
            }
            return ExitCode::from(2);
        }
    };
    let json = cli.json;
    match commands::run(cli.cmd) {
        Ok(out) => {
            if json {
                println!("{}", out.json);
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            let (code, kind, detail) = e.parts();
            if json {
                println!("{}", commands::envelope(kind, &detail));
            } else {
                eprintln!("error ({kind}): {detail}");
            }
            ExitCode::from(code)
        }
    }
}
