use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use affstr::campaign::{self, CampaignConfig, OutputFormat, Report};
use affstr::linalg::parse_rational;

#[derive(Parser)]
#[command(name = "affstr", version, about = "Strings, bands and convolution for the gentle algebra of type C~n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cartan data, defect and positive roots.
    Roots(Common),
    /// Basic strings, rank image and fibers of the rank map.
    Strings(Common),
    /// The commutator of two functions, e.g. `--f theta:0 --g chi:h1`.
    Bracket {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
    },
    /// Every check.
    Verify(Common),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Common {
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// `L`/`R` word of length n, or `all`.
    #[arg(long, default_value = "all")]
    orientation: String,
    #[arg(long, default_value_t = 2)]
    k_max: usize,
    /// Defaults to (2n+2)*(k_max+1).
    #[arg(long)]
    max_letters: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Band parameters, comma separated rationals.
    #[arg(long, value_delimiter = ',')]
    t_samples: Option<Vec<String>>,
}

impl Common {
    fn config(&self) -> Result<CampaignConfig, String> {
        let mut cfg = CampaignConfig::new(self.n, &self.orientation, self.k_max);
        if let Some(l) = self.max_letters {
            cfg.max_letters = l;
        }
        if let Some(ts) = &self.t_samples {
            cfg.t_samples = ts
                .iter()
                .map(|t| parse_rational(t).ok_or_else(|| format!("bad band parameter `{t}`")))
                .collect::<Result<_, _>>()?;
        }
        cfg.format = match self.format {
            Format::Text => OutputFormat::Text,
            Format::Json => OutputFormat::Json,
        };
        Ok(cfg)
    }
}

type Runner = Box<dyn Fn(&CampaignConfig) -> affstr::Result<Report>>;

fn run(cli: Cli) -> Result<Report, String> {
    let (common, run): (&Common, Runner) = match &cli.command {
        Command::Roots(c) => (c, Box::new(campaign::cmd_roots)),
        Command::Strings(c) => (c, Box::new(campaign::cmd_strings)),
        Command::Verify(c) => (c, Box::new(campaign::cmd_verify)),
        Command::Bracket { common, f, g } => {
            let (f, g) = (f.clone(), g.clone());
            (common, Box::new(move |cfg| campaign::cmd_bracket(cfg, &f, &g)))
        }
    };
    let cfg = common.config()?;
    let report = run(&cfg).map_err(|e| e.to_string())?;
    match cfg.format {
        OutputFormat::Json => println!("{}", report.to_json()),
        OutputFormat::Text => print!("{}", report.to_text()),
    }
    Ok(report)
}

fn main() -> ExitCode {
    if let Ok(v) = std::env::var("AFFSTR_THREADS") {
        match v.parse::<usize>() {
            Ok(t) if t > 0 => {
                if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
                    eprintln!("affstr: {e}");
                }
            }
            _ => eprintln!("affstr: ignoring AFFSTR_THREADS={v}"),
        }
    }
    match run(Cli::parse()) {
        Ok(report) => ExitCode::from(report.exit_code()),
        Err(e) => {
            eprintln!("affstr: {e}");
            ExitCode::from(101)
        }
    }
}
