//! `regpart`: enumeration, statistics, generating functions, Glaisher maps,
//! Hall–Littlewood expansions, character tables and verification suites.

mod commands;
mod output;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use output::{write_output, Format};

#[derive(Parser, Debug)]
#[command(name = "regpart", version, about = "Exact computations with regular and class-regular partitions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Flags shared by every subcommand.
#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Pairwise coprime moduli, e.g. `2,3`.
    #[arg(long, value_parser = commands::parse_moduli)]
    pub moduli: Option<regpart_core::partition::ModulusTuple>,
    /// Weight of the partitions.
    #[arg(long)]
    pub n: Option<usize>,
    /// Upper end of the weight range for verification suites.
    #[arg(long)]
    pub max_n: Option<usize>,
    /// Statistic index `j`.
    #[arg(long)]
    pub j: Option<u64>,
    /// Single modulus `r` (the root of unity order for symmetric functions).
    #[arg(long)]
    pub r: Option<u64>,
    /// 1-based position `i` of the modulus for `c_{r_i,n}`.
    #[arg(long)]
    pub i: Option<usize>,
    /// A partition, e.g. `3,1,1`.
    #[arg(long, value_parser = commands::parse_partition, allow_hyphen_values = false)]
    pub partition: Option<regpart_core::partition::Partition>,
    /// Truncation degree for generating functions.
    #[arg(long, default_value_t = 64)]
    pub degree: usize,
    /// Apply the `r`-reduction to Hall–Littlewood output.
    #[arg(long)]
    pub reduced: bool,
    /// Largest weight accepted for enumeration and statistics.
    #[arg(long, default_value_t = 30)]
    pub limit_n: usize,
    /// Largest weight accepted for character tables and symmetric functions.
    #[arg(long, default_value_t = 8)]
    pub limit_table_n: usize,
    /// Largest truncation degree accepted.
    #[arg(long, default_value_t = 512)]
    pub limit_degree: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl Common {
    /// The flags that were given, for the report metadata.
    pub fn params(&self) -> BTreeMap<String, String> {
        let mut p = BTreeMap::new();
        let mut put = |k: &str, v: Option<String>| {
            if let Some(v) = v {
                p.insert(k.to_string(), v);
            }
        };
        put("moduli", self.moduli.as_ref().map(|m| m.moduli().iter().map(u64::to_string).collect::<Vec<_>>().join(",")));
        put("n", self.n.map(|v| v.to_string()));
        put("max_n", self.max_n.map(|v| v.to_string()));
        put("j", self.j.map(|v| v.to_string()));
        put("r", self.r.map(|v| v.to_string()));
        put("i", self.i.map(|v| v.to_string()));
        put("partition", self.partition.as_ref().map(|l| l.parts().iter().map(usize::to_string).collect::<Vec<_>>().join(",")));
        put("degree", Some(self.degree.to_string()));
        if self.reduced {
            put("reduced", Some("true".into()));
        }
        p
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List class-regular (cp) or regular (rp) partitions of n.
    Enumerate {
        #[arg(value_enum)]
        family: EnumFamily,
        #[command(flatten)]
        common: Common,
    },
    /// Partition statistics V, W, X, Y and the products a, b and exponent c.
    Stats {
        #[arg(value_enum)]
        stat: StatKind,
        #[command(flatten)]
        common: Common,
    },
    /// Coefficients of a generating function up to --degree.
    Series {
        #[arg(value_enum)]
        kind: SeriesKind,
        #[command(flatten)]
        common: Common,
    },
    /// The Glaisher correspondence and its step statistics.
    Glaisher {
        #[arg(value_enum)]
        direction: GlaisherKind,
        #[command(flatten)]
        common: Common,
    },
    /// Kostka–Foulkes matrix K(t) for partitions of n.
    Kostka {
        #[command(flatten)]
        common: Common,
    },
    /// Hall–Littlewood functions in the power-sum basis.
    Hl {
        #[arg(value_enum)]
        kind: HlKind,
        #[command(flatten)]
        common: Common,
    },
    /// Ordinary or r-regular character table of S_n.
    Chartable {
        #[arg(value_enum)]
        kind: TableKind,
        #[command(flatten)]
        common: Common,
    },
    /// Run a verification suite; exit status 1 on any violation.
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(
            regpart_core::verify::Suite::ALL.map(|s| s.name())
        ))]
        suite: String,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum EnumFamily {
    Cp,
    Rp,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum StatKind {
    #[value(name = "V")]
    V,
    #[value(name = "W")]
    W,
    #[value(name = "X")]
    X,
    #[value(name = "Y")]
    Y,
    #[value(name = "a")]
    A,
    #[value(name = "b")]
    B,
    #[value(name = "c")]
    C,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SeriesKind {
    Phi,
    V,
    W,
    C,
    Rp,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GlaisherKind {
    Forward,
    Inverse,
    Gstats,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum HlKind {
    P,
    Q,
    Qprime,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum TableKind {
    Full,
    Regular,
}

/// How a command ended, short of a usage error.
pub enum Outcome {
    Ok(output::Rendered),
    VerificationFailed(output::Rendered),
}

impl Outcome {
    fn exit_code(&self) -> u8 {
        match self {
            Outcome::Ok(_) => 0,
            Outcome::VerificationFailed(_) => 1,
        }
    }

    fn into_rendered(self) -> output::Rendered {
        match self {
            Outcome::Ok(r) | Outcome::VerificationFailed(r) => r,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (result, common) = match cli.command {
        Command::Enumerate { family, common } => (commands::enumerate(family, &common), common),
        Command::Stats { stat, common } => (commands::stats(stat, &common), common),
        Command::Series { kind, common } => (commands::series(kind, &common), common),
        Command::Glaisher { direction, common } => (commands::glaisher(direction, &common), common),
        Command::Kostka { common } => (commands::kostka(&common), common),
        Command::Hl { kind, common } => (commands::hl(kind, &common), common),
        Command::Chartable { kind, common } => (commands::chartable(kind, &common), common),
        Command::Verify { suite, common } => (commands::verify(&suite, &common), common),
    };
    let (rendered, code) = match result {
        Ok(outcome) => {
            let code = ExitCode::from(outcome.exit_code());
            (outcome.into_rendered(), code)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let text = match rendered.render(common.format) {
        Ok(text) => text,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = write_output(&text, common.out.as_deref()) {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(2);
    }
    code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rendered() -> output::Rendered {
        let meta = output::Meta { command: "verify thm21".into(), params: BTreeMap::new() };
        output::Rendered::new(meta, &true, "ok\n".into())
    }

    #[test]
    fn exit_codes() {
        assert_eq!(Outcome::Ok(rendered()).exit_code(), 0);
        assert_eq!(Outcome::VerificationFailed(rendered()).exit_code(), 1);
    }

    #[test]
    fn csv_only_where_offered() {
        assert!(rendered().render(Format::Csv).is_err());
        assert_eq!(rendered().with_csv("value\n1\n".into()).render(Format::Csv).unwrap(), "value\n1\n");
        let json = rendered().render(Format::Json).unwrap();
        assert!(json.ends_with("}\n"));
    }
}
