use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::SeedableRng;

use orbimap::combing::DEFAULT_SYLLABLE_CAP;
use orbimap::oracle::oracle_is_trivial;
use orbimap::presentation::expand_word;
use orbimap::random::random_pure_word;
use orbimap::verify::{verify_grid, Grid, VerifyOptions};
use orbimap::{
    full_presentation, parse_word, perm_image, pure_presentation, Engine, Error, ExportFormat,
    GPath, GammaElement, GroupParams, Word,
};

#[derive(Parser)]
#[command(
    name = "orbimap",
    version,
    about = "Mapping class groups of orbifold disks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct ParamArgs {
    /// Number of marked points
    #[arg(short = 'n', default_value_t = 0)]
    n: u32,
    /// Number of punctures
    #[arg(short = 'L', default_value_t = 0)]
    punctures: u32,
    /// Number of cone points
    #[arg(short = 'N', default_value_t = 0)]
    cones: u32,
    /// Cone orders, comma separated (defaults to all 2)
    #[arg(short = 'm', value_delimiter = ',')]
    orders: Option<Vec<u32>>,
    /// Syllable length cap for combing (also ORBIMAP_MAX_SYLLABLE)
    #[arg(long)]
    cap: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args, Clone)]
struct Input {
    /// Input text; read from --file when omitted
    text: Option<String>,
    #[arg(long)]
    file: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    Pure,
    Full,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Algebra,
}

#[derive(Subcommand)]
enum Command {
    /// Print the combing normal form of a word
    Nf {
        #[command(flatten)]
        p: ParamArgs,
        #[command(flatten)]
        input: Input,
    },
    /// Decide triviality; exit 0 when trivial and 1 otherwise
    Trivial {
        #[command(flatten)]
        p: ParamArgs,
        #[command(flatten)]
        input: Input,
    },
    /// Export a presentation
    Present {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long, value_enum, default_value = "pure")]
        group: GroupArg,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Expand abbreviated pure letters into H, T, U
    Expand {
        #[command(flatten)]
        p: ParamArgs,
        #[command(flatten)]
        input: Input,
    },
    /// Point-push a word in the level-n free generators
    Push {
        #[command(flatten)]
        p: ParamArgs,
        #[command(flatten)]
        input: Input,
    },
    /// Forget the last marked point of a pure word
    Forget {
        #[command(flatten)]
        p: ParamArgs,
        #[command(flatten)]
        input: Input,
    },
    /// Print the permutation of the marked points
    Perm {
        #[command(flatten)]
        p: ParamArgs,
        #[command(flatten)]
        input: Input,
    },
    /// Free products of cyclic groups
    Gamma {
        #[command(subcommand)]
        op: GammaOp,
    },
    /// G-paths
    Gpath {
        #[command(subcommand)]
        op: GpathOp,
    },
    /// Braid-group oracle
    Oracle {
        #[command(subcommand)]
        op: OracleOp,
    },
    /// Run the relator, oracle-agreement and action suites over a grid
    Verify {
        #[arg(long, default_value = "n=0..4,L=0..2,N=0..2")]
        grid: String,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 30)]
        max_len: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Time combing of random pure words
    Bench {
        #[command(flatten)]
        p: ParamArgs,
        #[arg(long, default_value_t = 100)]
        len: usize,
        #[arg(long, default_value_t = 20)]
        count: usize,
    },
}

#[derive(Subcommand)]
enum GammaOp {
    /// Normal form of an element such as "g1^2*g2"
    Nf {
        #[command(flatten)]
        p: ParamArgs,
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Subcommand)]
enum GpathOp {
    /// Continuous form of "(g0, [t1]s1, g1, ...)"
    Normalize {
        #[command(flatten)]
        p: ParamArgs,
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Subcommand)]
enum OracleOp {
    /// Decide triviality in the braid group; exit 0 when trivial
    Trivial {
        #[command(flatten)]
        p: ParamArgs,
        #[command(flatten)]
        input: Input,
    },
}

enum Failure {
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type CmdResult = Result<ExitCode, Failure>;

impl ParamArgs {
    fn params(&self) -> Result<GroupParams, Error> {
        let orders = self
            .orders
            .clone()
            .unwrap_or_else(|| vec![2; self.cones as usize]);
        if orders.len() != self.cones as usize {
            return Err(Error::InvalidParams(format!(
                "-m lists {} orders but N = {}",
                orders.len(),
                self.cones
            )));
        }
        GroupParams::new(self.n, self.punctures, orders)
    }

    fn cap(&self) -> Result<usize, Error> {
        if let Some(c) = self.cap {
            return Ok(c);
        }
        match std::env::var("ORBIMAP_MAX_SYLLABLE") {
            Ok(v) => v.trim().parse().map_err(|_| {
                Error::InvalidParams(format!("ORBIMAP_MAX_SYLLABLE is not a number: {v}"))
            }),
            Err(_) => Ok(DEFAULT_SYLLABLE_CAP),
        }
    }

    fn engine(&self) -> Result<Engine, Error> {
        Ok(Engine::new(&self.params()?).with_cap(self.cap()?))
    }
}

impl Input {
    fn read(&self) -> Result<String, Failure> {
        match (&self.text, &self.file) {
            (Some(t), None) => Ok(t.clone()),
            (None, Some(f)) => std::fs::read_to_string(f)
                .map(|s| s.trim().to_string())
                .map_err(|e| Failure::Io(format!("{}: {e}", f.display()))),
            (None, None) => Err(Failure::Io("no input given".into())),
            (Some(_), Some(_)) => Err(Failure::Io("give either inline input or --file".into())),
        }
    }

    fn word(&self, params: &GroupParams) -> Result<Word, Failure> {
        Ok(parse_word(&self.read()?, params)?)
    }
}

fn verdict(trivial: bool) -> ExitCode {
    println!("{}", if trivial { "trivial" } else { "nontrivial" });
    ExitCode::from(if trivial { 0 } else { 1 })
}

fn run(cmd: Command) -> CmdResult {
    match cmd {
        Command::Nf { p, input } => {
            let engine = p.engine()?;
            let w = input.word(engine.params())?;
            println!("{}", engine.normal_form(&w)?);
        }
        Command::Trivial { p, input } => {
            let engine = p.engine()?;
            let w = input.word(engine.params())?;
            return Ok(verdict(engine.is_trivial(&w)?));
        }
        Command::Present { p, group, format } => {
            let params = p.params()?;
            let pres = match group {
                GroupArg::Pure => pure_presentation(&params),
                GroupArg::Full => full_presentation(&params)?,
            };
            let format = match format {
                FormatArg::Text => ExportFormat::Text,
                FormatArg::Json => ExportFormat::Json,
                FormatArg::Algebra => ExportFormat::Algebra,
            };
            print!("{}", pres.export(format));
        }
        Command::Expand { p, input } => {
            let w = input.word(&p.params()?)?;
            println!("{}", expand_word(&w));
        }
        Command::Push { p, input } => {
            let engine = p.engine()?;
            let w = input.word(engine.params())?;
            println!("{}", engine.push(&w)?);
        }
        Command::Forget { p, input } => {
            let engine = p.engine()?;
            let w = input.word(engine.params())?;
            println!("{}", engine.forget(&w)?);
        }
        Command::Perm { p, input } => {
            let params = p.params()?;
            let w = input.word(&params)?;
            println!("{}", perm_image(&w, params.n())?);
        }
        Command::Gamma {
            op: GammaOp::Nf { p, input },
        } => {
            let params = p.params()?;
            println!("{}", GammaElement::parse(&input.read()?, &params)?);
        }
        Command::Gpath {
            op: GpathOp::Normalize { p, input },
        } => {
            let params = p.params()?;
            let path = GPath::parse(&input.read()?, &params)?;
            println!("{}", path.normalize(&params)?);
        }
        Command::Oracle {
            op: OracleOp::Trivial { p, input },
        } => {
            let params = p.params()?;
            let w = input.word(&params)?;
            return Ok(verdict(oracle_is_trivial(&w, &params)?));
        }
        Command::Verify {
            grid,
            samples,
            max_len,
            seed,
            format,
        } => {
            let grid: Grid = grid.parse()?;
            let opts = VerifyOptions {
                samples,
                max_len,
                seed,
                cap: DEFAULT_SYLLABLE_CAP,
            };
            let reports = verify_grid(&grid, &opts);
            let failed = reports.iter().filter(|r| !r.passed()).count();
            if matches!(format, FormatArg::Json) {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&reports).expect("reports serialize")
                );
            } else {
                for r in &reports {
                    println!("{r}");
                    for line in r
                        .relator_failures
                        .iter()
                        .chain(&r.oracle_relator_failures)
                        .chain(&r.disagreements)
                        .chain(&r.action_failures)
                    {
                        println!("  {line}");
                    }
                }
                let relators: usize = reports.iter().map(|r| r.relators).sum();
                let words: usize = reports.iter().map(|r| r.samples).sum();
                let actions: usize = reports.iter().map(|r| r.action_checks).sum();
                println!(
                    "summary: {} tuples, {} failed; {relators} relators, {words} sampled words, {actions} action checks",
                    reports.len(),
                    failed
                );
            }
            return Ok(ExitCode::from(u8::from(failed > 0)));
        }
        Command::Bench { p, len, count } => {
            let engine = p.engine()?;
            let mut rng = StdRng::seed_from_u64(p.seed);
            let mut worst = 0.0f64;
            let mut blowups = 0;
            let start = Instant::now();
            for _ in 0..count {
                let w = random_pure_word(engine.params(), len, &mut rng);
                let t = Instant::now();
                match engine.normal_form(&w) {
                    Ok(_) => {}
                    Err(Error::Blowup { .. }) => blowups += 1,
                    Err(e) => return Err(e.into()),
                }
                worst = worst.max(t.elapsed().as_secs_f64());
            }
            let total = start.elapsed().as_secs_f64();
            println!(
                "{count} words of length {len} at {}: total {total:.3}s, mean {:.4}s, worst {worst:.4}s, blowups {blowups}",
                engine.params(),
                total / count.max(1) as f64
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            let msg = e.kind().to_string();
            eprintln!("error\tusage\t{msg}");
            return ExitCode::from(2);
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(Failure::Io(msg)) => {
            eprintln!("error\tinput\t{msg}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error\t{}\t{e}", e.kind());
            ExitCode::from(if matches!(e, Error::Blowup { .. }) {
                3
            } else {
                2
            })
        }
    }
}
