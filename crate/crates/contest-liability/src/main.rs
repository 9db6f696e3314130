//! Command-line front end: treatment predictions, equilibrium enumeration,
//! region maps, brute-force verification, and simulation batches.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O
//! error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use contest_liability::equilibrium::{self, EquilibriumKind, EquilibriumSet};
use contest_liability::model::ModelParams;
use contest_liability::oracle::{
    self, check_equivalence_against, sample_non_boundary_params, GridSpec,
};
use contest_liability::sim::{
    self, AgentPolicy, BeliefSource, SimOptions, Treatment, TreatmentPreset, ROUNDS_CSV_HEADER,
};
use contest_liability::sweep::{
    self, FineScale, OutputFormat, RangeSpec, SweepConfig, TreatmentPrediction,
};

/// Environment variable naming the default output directory.
const OUT_DIR_ENV: &str = "CONTEST_LIABILITY_OUT";

#[derive(Parser)]
#[command(
    name = "contest-liability",
    version,
    about = "Two-team contest with cheating under individual or joint liability: predictions, equilibria, region maps, verification, simulation",
    after_help = "Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.\n\
                  Set CONTEST_LIABILITY_OUT to choose a default output directory."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Predicted cheating rates per treatment (or custom parameters)
    Predict(PredictArgs),
    /// List every equilibrium at a treatment or custom parameter point
    Equilibria(EquilibriaArgs),
    /// Classify a (liability, fine) grid and export it with boundary curves
    Regions(RegionsArgs),
    /// Brute-force verification of the closed-form layer
    Verify(VerifyArgs),
    /// Monte Carlo simulation of the two-stage protocol
    Simulate(SimulateArgs),
}

/// Custom parameter flags shared by `predict` and `equilibria`.
#[derive(Args, Clone, Debug, Default)]
struct ParamArgs {
    /// Cheating effectiveness multiplier (> 1)
    #[arg(long)]
    delta: Option<f64>,
    /// Contestant's revenue share (0, 1)
    #[arg(long)]
    revenue_share: Option<f64>,
    /// Audit probability [0, 1]
    #[arg(long)]
    audit_prob: Option<f64>,
    /// Fine in prize currency units
    #[arg(long)]
    fine: Option<f64>,
    /// Contestant's liability share [0, 1]
    #[arg(long)]
    eta: Option<f64>,
    /// Total prize (> 0)
    #[arg(long)]
    prize: Option<f64>,
    /// Normalized expected fine per unit of the prize; overrides
    /// audit-prob/fine/prize with a prize-1 parameterization
    #[arg(long)]
    pf_rel: Option<f64>,
}

impl ParamArgs {
    fn any_set(&self) -> bool {
        self.delta.is_some()
            || self.revenue_share.is_some()
            || self.audit_prob.is_some()
            || self.fine.is_some()
            || self.eta.is_some()
            || self.prize.is_some()
            || self.pf_rel.is_some()
    }

    fn build(&self) -> Result<ModelParams, CliError> {
        let delta = self.delta.unwrap_or(2.0);
        let revenue_share = self.revenue_share.unwrap_or(2.0 / 3.0);
        let eta = self.eta.unwrap_or(2.0 / 3.0);
        let params = if let Some(pf_rel) = self.pf_rel {
            if self.audit_prob.is_some() || self.fine.is_some() || self.prize.is_some() {
                return Err(CliError::Usage(
                    "--pf-rel conflicts with --audit-prob/--fine/--prize".into(),
                ));
            }
            ModelParams::from_pf_rel(delta, revenue_share, eta, pf_rel)
        } else {
            ModelParams::new(
                delta,
                revenue_share,
                self.audit_prob.unwrap_or(0.25),
                self.fine.unwrap_or(65.0),
                eta,
                self.prize.unwrap_or(90.0),
            )
        };
        params.map_err(|e| CliError::Usage(e.to_string()))
    }
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    #[default]
    Csv,
    Json,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> OutputFormat {
        match f {
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        }
    }
}

#[derive(Args)]
struct PredictArgs {
    /// Treatment names (Jo_H, Jo_L, Ind_H, Ind_L, Jo_40, Ind_40); all six
    /// when omitted and no custom parameters are given
    treatments: Vec<String>,
    #[command(flatten)]
    params: ParamArgs,
    /// Also write the table to this file (format from --format)
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
}

#[derive(Args)]
struct EquilibriaArgs {
    /// Treatment names; requires either names or custom parameters
    treatments: Vec<String>,
    #[command(flatten)]
    params: ParamArgs,
    /// Print the equilibrium sets as JSON instead of a table
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct RegionsArgs {
    /// JSON config file with the sweep grid; flags override its fields
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    delta: Option<f64>,
    #[arg(long)]
    revenue_share: Option<f64>,
    /// Liability-share grid as min:max:steps
    #[arg(long)]
    eta_range: Option<String>,
    /// Expected-fine grid (per unit of the prize) as min:max:steps
    #[arg(long)]
    pf_range: Option<String>,
    /// Attach a raw-fine column computed at this audit probability
    #[arg(long, requires = "prize")]
    audit_prob: Option<f64>,
    /// Attach a raw-fine column computed at this prize
    #[arg(long, requires = "audit_prob")]
    prize: Option<f64>,
    /// Output file; falls back to $CONTEST_LIABILITY_OUT/regions.<ext>
    #[arg(long)]
    output: Option<PathBuf>,
    /// Boundary-curve file (CSV only); derived from --output when omitted
    #[arg(long)]
    boundaries: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
}

#[derive(Args)]
struct VerifyArgs {
    /// Random parameter points for the comparative-statics theorem check
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    /// Random parameter sets for the oracle-vs-enumeration comparison
    #[arg(long, default_value_t = 100)]
    param_sets: usize,
    /// Seed of the random draws (default 42)
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Grid points for intention-probability scans
    #[arg(long, default_value_t = 101)]
    sigma_steps: usize,
    /// Grid points for effort scans
    #[arg(long, default_value_t = 2001)]
    effort_steps: usize,
    /// Payoff tolerance certifying an epsilon-equilibrium
    #[arg(long, default_value_t = 1e-6)]
    epsilon: f64,
    /// Negative control: inject a bias into the enumeration and require the
    /// oracle to flag it
    #[arg(long)]
    self_test: bool,
}

#[derive(Args)]
struct SimulateArgs {
    /// Treatment name
    treatment: String,
    /// Intention policy for all four players:
    /// equilibrium[:INDEX|:mixed|:lowest], logit:PRECISION,WINDOW[,intentions],
    /// or fixed:SIGMA
    #[arg(long, default_value = "equilibrium:lowest")]
    policy: String,
    /// Number of independent sessions
    #[arg(long, default_value_t = 1)]
    sessions: usize,
    /// Base seed; session i runs with a seed derived from (seed, i)
    /// (default 42)
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Override the preset's number of rounds per session
    #[arg(long)]
    rounds: Option<usize>,
    /// Round continuation efforts to whole currency units
    #[arg(long)]
    integer_efforts: bool,
    /// Directory for rounds.csv and summary.json; falls back to
    /// $CONTEST_LIABILITY_OUT; no files when neither is set
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Verification(String),
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            let (label, message) = match &err {
                CliError::Usage(m) => ("usage error", m),
                CliError::Verification(m) => ("verification failure", m),
                CliError::Io(m) => ("i/o error", m),
            };
            eprintln!("{label}: {message}");
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Predict(args) => cmd_predict(args),
        Command::Equilibria(args) => cmd_equilibria(args),
        Command::Regions(args) => cmd_regions(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Simulate(args) => cmd_simulate(args),
    }
}

fn parse_treatments(names: &[String]) -> Result<Vec<Treatment>, CliError> {
    names
        .iter()
        .map(|name| name.parse::<Treatment>().map_err(CliError::Usage))
        .collect()
}

/// Named parameter points requested on the command line.
fn selected_params(
    treatments: &[String],
    params: &ParamArgs,
    default_all: bool,
) -> Result<Vec<(String, ModelParams)>, CliError> {
    if params.any_set() {
        if !treatments.is_empty() {
            return Err(CliError::Usage(
                "give either treatment names or custom parameters, not both".into(),
            ));
        }
        return Ok(vec![("custom".to_string(), params.build()?)]);
    }
    let treatments = if treatments.is_empty() {
        if !default_all {
            return Err(CliError::Usage("name at least one treatment or pass custom parameters".into()));
        }
        Treatment::ALL.to_vec()
    } else {
        parse_treatments(treatments)?
    };
    Ok(treatments
        .into_iter()
        .map(|t| (t.to_string(), t.preset().params))
        .collect())
}

fn percent(x: f64) -> String {
    format!("{:.1}%", 100.0 * x)
}

fn cmd_predict(args: PredictArgs) -> Result<(), CliError> {
    let selections = selected_params(&args.treatments, &args.params, true)?;
    let predictions: Vec<TreatmentPrediction> = selections
        .iter()
        .map(|(name, params)| {
            sweep::predict_for_params(name, params).map_err(|e| CliError::Usage(e.to_string()))
        })
        .collect::<Result<_, _>>()?;

    println!("{:<10} {:>9} {:>12} {:>9}  note", "treatment", "managers", "contestants", "overall");
    for p in &predictions {
        let note = if p.multiple_p_bar {
            format!(
                "knife edge: p_bar spans {}..{} across equilibria",
                percent(p.p_bar_low),
                percent(p.p_bar_high)
            )
        } else {
            String::new()
        };
        println!(
            "{:<10} {:>9} {:>12} {:>9}  {}",
            p.name,
            percent(p.manager_rate),
            percent(p.contestant_rate),
            percent(p.overall_rate),
            note
        );
    }

    if let Some(path) = &args.output {
        match OutputFormat::from(args.format) {
            OutputFormat::Csv => {
                let mut writer = csv::Writer::from_writer(create_file(path)?);
                sweep::write_predictions_csv(&predictions, &mut writer)?;
            }
            OutputFormat::Json => write_json(path, &predictions)?,
        }
    }
    Ok(())
}

fn format_profile(profile: &contest_liability::CheatProfile) -> String {
    let s = profile.as_array();
    format!("(m1={}, c1={}, m2={}, c2={})", trim(s[0]), trim(s[1]), trim(s[2]), trim(s[3]))
}

fn trim(x: f64) -> String {
    if x == x.trunc() {
        format!("{}", x as i64)
    } else {
        format!("{x:.4}")
    }
}

fn kind_label(kind: EquilibriumKind) -> &'static str {
    match kind {
        EquilibriumKind::PureSymmetric => "pure symmetric",
        EquilibriumKind::PureAsymmetric => "pure asymmetric",
        EquilibriumKind::MixedContestants => "mixed contestants",
    }
}

fn cmd_equilibria(args: EquilibriaArgs) -> Result<(), CliError> {
    let selections = selected_params(&args.treatments, &args.params, true)?;
    let mut documents = Vec::new();
    for (name, params) in &selections {
        let set = equilibrium::enumerate_equilibria(params)
            .map_err(|e| CliError::Usage(e.to_string()))?;
        if args.json {
            documents.push(serde_json::json!({
                "name": name,
                "params": params,
                "mu_hat": equilibrium::mu_hat(params),
                "eta_hat": equilibrium::eta_hat(params),
                "region": equilibrium::classify_region(params),
                "set": set,
            }));
            continue;
        }
        print_equilibria(name, params, &set);
    }
    if args.json {
        println!("{}", serde_json::to_string_pretty(&documents)?);
    }
    Ok(())
}

fn print_equilibria(name: &str, params: &ModelParams, set: &EquilibriumSet) {
    let region = equilibrium::classify_region(params);
    println!(
        "{name}: delta={}, r={:.4}, eta={:.4}, pf_rel={:.6}",
        params.delta, params.revenue_share, params.liability_share,
        params.pf_rel()
    );
    let eta_hat = equilibrium::eta_hat(params)
        .map(|v| format!("{v:.6}"))
        .unwrap_or_else(|| "undefined (zero expected fine)".into());
    println!(
        "  mu_hat = {:.6}, eta_hat = {}, regime = {:?}/{:?}",
        region.mu_hat, eta_hat, region.manager_regime, region.fine_regime
    );
    for (i, eq) in set.equilibria.iter().enumerate() {
        println!(
            "  [{i}] {:<17} {}  p_bar = {}",
            kind_label(eq.kind),
            format_profile(&eq.profile),
            trim(eq.avg_cheat_prob)
        );
    }
    let flags = &set.boundary_flags;
    let mut markers = Vec::new();
    if flags.eta_at_threshold {
        markers.push("eta at manager threshold");
    }
    if flags.mu_at_zero {
        markers.push("mu_hat at 0");
    }
    if flags.mu_at_half {
        markers.push("mu_hat at 1/2");
    }
    if flags.mu_at_one {
        markers.push("mu_hat at 1");
    }
    println!(
        "  p_bar range [{}, {}]{}",
        trim(set.p_bar_low),
        trim(set.p_bar_high),
        if markers.is_empty() {
            String::new()
        } else {
            format!("; boundary: {}", markers.join(", "))
        }
    );
}

fn parse_range(text: &str) -> Result<RangeSpec, CliError> {
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 3 {
        return Err(CliError::Usage(format!("range '{text}' must look like min:max:steps")));
    }
    let min: f64 = parts[0].parse().map_err(|_| CliError::Usage(format!("bad range min '{}'", parts[0])))?;
    let max: f64 = parts[1].parse().map_err(|_| CliError::Usage(format!("bad range max '{}'", parts[1])))?;
    let steps: usize =
        parts[2].parse().map_err(|_| CliError::Usage(format!("bad range steps '{}'", parts[2])))?;
    RangeSpec::new(min, max, steps).map_err(|e| CliError::Usage(e.to_string()))
}

fn env_out_dir() -> Option<PathBuf> {
    std::env::var_os(OUT_DIR_ENV).map(PathBuf::from)
}

fn create_file(path: &Path) -> Result<fs::File, CliError> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent)?;
        }
    }
    fs::File::create(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn write_json<T: serde::Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    let mut file = create_file(path)?;
    serde_json::to_writer_pretty(&mut file, value)?;
    file.write_all(b"\n")?;
    Ok(())
}

fn cmd_regions(args: RegionsArgs) -> Result<(), CliError> {
    // Start from the config file when given; explicit flags win.
    let mut config = match &args.config {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            serde_json::from_str::<SweepConfig>(&text)
                .map_err(|e| CliError::Usage(format!("bad config {}: {e}", path.display())))?
        }
        None => SweepConfig {
            delta: 2.0,
            revenue_share: 2.0 / 3.0,
            eta_range: RangeSpec { min: 0.0, max: 1.0, steps: 101 },
            pf_range: RangeSpec { min: 0.0, max: 0.25, steps: 101 },
            fine_scale: None,
        },
    };
    if let Some(delta) = args.delta {
        config.delta = delta;
    }
    if let Some(r) = args.revenue_share {
        config.revenue_share = r;
    }
    if let Some(range) = &args.eta_range {
        config.eta_range = parse_range(range)?;
    }
    if let Some(range) = &args.pf_range {
        config.pf_range = parse_range(range)?;
    }
    if let (Some(audit_prob), Some(prize)) = (args.audit_prob, args.prize) {
        config.fine_scale = Some(FineScale { audit_prob, prize });
    }
    config.validate().map_err(|e| CliError::Usage(e.to_string()))?;

    let extension = match OutputFormat::from(args.format) {
        OutputFormat::Csv => "csv",
        OutputFormat::Json => "json",
    };
    let output = args
        .output
        .or_else(|| env_out_dir().map(|dir| dir.join(format!("regions.{extension}"))))
        .ok_or_else(|| {
            CliError::Usage(format!("regions needs --output (or ${OUT_DIR_ENV})"))
        })?;

    let document = sweep::region_map(&config).map_err(|e| CliError::Usage(e.to_string()))?;

    match OutputFormat::from(args.format) {
        OutputFormat::Json => {
            write_json(&output, &document)?;
            println!("wrote {} rows to {}", document.rows.len(), output.display());
        }
        OutputFormat::Csv => {
            let mut writer = csv::Writer::from_writer(create_file(&output)?);
            sweep::write_region_csv(&document.rows, &mut writer)?;
            let boundaries = args.boundaries.unwrap_or_else(|| {
                let stem = output.file_stem().unwrap_or_default().to_string_lossy();
                output.with_file_name(format!("{stem}_boundaries.csv"))
            });
            let mut writer = csv::Writer::from_writer(create_file(&boundaries)?);
            sweep::write_boundary_csv(&document.boundaries, &mut writer)?;
            println!(
                "wrote {} rows to {} (boundaries in {})",
                document.rows.len(),
                output.display(),
                boundaries.display()
            );
        }
    }
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> Result<(), CliError> {
    if args.samples == 0 || args.param_sets == 0 {
        return Err(CliError::Usage("--samples and --param-sets must be at least 1".into()));
    }
    let grid = GridSpec {
        sigma_steps: args.sigma_steps,
        effort_steps: args.effort_steps,
        epsilon: args.epsilon,
    };
    grid.validate().map_err(|e| CliError::Usage(e.to_string()))?;

    if args.self_test {
        return self_test(args.param_sets.min(20), args.seed, &grid);
    }

    let theorem = oracle::verify_theorem_samples(args.samples, args.seed);
    let equivalence = oracle::verify_oracle_equivalence(args.param_sets, args.seed.wrapping_add(1), &grid);

    println!(
        "theorem: {}/{} ok; oracle: {}/{} ok",
        theorem.checked - theorem.failed,
        theorem.checked,
        equivalence.checked - equivalence.failed,
        equivalence.checked
    );
    if theorem.all_passed() && equivalence.all_passed() {
        return Ok(());
    }
    for failure in &theorem.failures {
        eprintln!(
            "theorem failure at delta={}, r={}, pf_rel={}: {}",
            failure.delta, failure.revenue_share, failure.pf_rel, failure.message
        );
    }
    for failure in &equivalence.failures {
        eprintln!("oracle mismatch at {:?}: {}", failure.params, failure.message);
    }
    Err(CliError::Verification(format!(
        "{} theorem and {} oracle failures",
        theorem.failed, equivalence.failed
    )))
}

/// Negative control: enumerate at parameters whose contestant indifference
/// point is shifted up by 0.1 (via the liability share, which leaves the
/// manager threshold untouched), then demand that the brute-force comparison
/// against the unshifted game flags the discrepancy.
fn self_test(sets: usize, seed: u64, grid: &GridSpec) -> Result<(), CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut detected = 0;
    let mut tried = 0;
    while tried < sets {
        let params = sample_non_boundary_params(&mut rng);
        let denominator = params.revenue_share * (params.delta - 1.0).powi(2)
            / (2.0 * (1.0 + params.delta).powi(2));
        let shifted_eta = params.liability_share - 0.1 * denominator / params.pf_rel();
        if !(0.0..=1.0).contains(&shifted_eta) {
            continue;
        }
        let shifted = ModelParams { liability_share: shifted_eta, ..params };
        let claimed = match equilibrium::enumerate_equilibria(&shifted) {
            Ok(set) => set.equilibria,
            Err(_) => continue,
        };
        let actual = equilibrium::enumerate_equilibria(&params)
            .map_err(|e| CliError::Usage(e.to_string()))?;
        // Only sets where the injected shift changes the menu are probative.
        if claimed.len() == actual.equilibria.len()
            && claimed
                .iter()
                .zip(&actual.equilibria)
                .all(|(a, b)| a.profile.as_array() == b.profile.as_array())
        {
            continue;
        }
        tried += 1;
        if check_equivalence_against(&params, &claimed, grid).is_err() {
            detected += 1;
        }
    }
    println!("self-test: injected bias detected in {detected}/{tried} perturbed sets");
    if detected == tried && tried > 0 {
        Ok(())
    } else {
        Err(CliError::Verification(
            "oracle failed to flag a deliberately perturbed enumeration".into(),
        ))
    }
}

fn parse_policy(text: &str, set: &EquilibriumSet) -> Result<AgentPolicy, CliError> {
    let (kind, rest) = match text.split_once(':') {
        Some((k, r)) => (k, Some(r)),
        None => (text, None),
    };
    match kind {
        "equilibrium" => {
            let index = match rest.unwrap_or("lowest") {
                "lowest" => set
                    .equilibria
                    .iter()
                    .enumerate()
                    .min_by(|a, b| a.1.avg_cheat_prob.total_cmp(&b.1.avg_cheat_prob))
                    .map(|(i, _)| i)
                    .expect("equilibrium set is never empty"),
                "mixed" => set
                    .equilibria
                    .iter()
                    .position(|e| e.kind == EquilibriumKind::MixedContestants)
                    .ok_or_else(|| {
                        CliError::Usage("no mixed equilibrium at these parameters".into())
                    })?,
                index => index.parse::<usize>().map_err(|_| {
                    CliError::Usage(format!(
                        "bad equilibrium selector '{index}' (use an index, 'mixed', or 'lowest')"
                    ))
                })?,
            };
            if index >= set.equilibria.len() {
                return Err(CliError::Usage(format!(
                    "equilibrium index {index} out of range ({} available)",
                    set.equilibria.len()
                )));
            }
            Ok(AgentPolicy::EquilibriumPlay { index })
        }
        "logit" => {
            let rest = rest.ok_or_else(|| {
                CliError::Usage("logit policy needs parameters: logit:PRECISION,WINDOW".into())
            })?;
            let parts: Vec<&str> = rest.split(',').collect();
            if parts.len() < 2 || parts.len() > 3 {
                return Err(CliError::Usage(
                    "logit policy looks like logit:PRECISION,WINDOW[,implemented|intentions]".into(),
                ));
            }
            let precision: f64 = parts[0]
                .parse()
                .map_err(|_| CliError::Usage(format!("bad logit precision '{}'", parts[0])))?;
            let window: usize = parts[1]
                .parse()
                .map_err(|_| CliError::Usage(format!("bad logit window '{}'", parts[1])))?;
            let belief_source = match parts.get(2).copied() {
                None | Some("implemented") => BeliefSource::Implemented,
                Some("intentions") => BeliefSource::Intentions,
                Some(other) => {
                    return Err(CliError::Usage(format!("bad belief source '{other}'")));
                }
            };
            Ok(AgentPolicy::LogitBestResponse { precision, window, belief_source })
        }
        "fixed" => {
            let rest =
                rest.ok_or_else(|| CliError::Usage("fixed policy needs a probability: fixed:SIGMA".into()))?;
            let sigma: f64 = rest
                .parse()
                .map_err(|_| CliError::Usage(format!("bad fixed probability '{rest}'")))?;
            Ok(AgentPolicy::FixedProbability { sigma })
        }
        other => Err(CliError::Usage(format!(
            "unknown policy '{other}' (expected equilibrium, logit, or fixed)"
        ))),
    }
}

fn cmd_simulate(args: SimulateArgs) -> Result<(), CliError> {
    if args.sessions == 0 {
        return Err(CliError::Usage("--sessions must be at least 1".into()));
    }
    let treatment: Treatment = args.treatment.parse().map_err(CliError::Usage)?;
    let mut preset: TreatmentPreset = treatment.preset();
    if let Some(rounds) = args.rounds {
        if rounds == 0 {
            return Err(CliError::Usage("--rounds must be at least 1".into()));
        }
        preset.rounds = rounds;
    }
    let set = equilibrium::enumerate_equilibria(&preset.params)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let policy = parse_policy(&args.policy, &set)?;
    policy.validate().map_err(|e| CliError::Usage(e.to_string()))?;
    let policies = [policy; 4];
    let options = SimOptions { integer_efforts: args.integer_efforts };

    let out_dir = args.output.or_else(env_out_dir);
    let summary = if let Some(dir) = &out_dir {
        // Keep full sessions for the round-level file.
        fs::create_dir_all(dir)?;
        let mut rounds_writer =
            csv::Writer::from_writer(create_file(&dir.join("rounds.csv"))?);
        rounds_writer.write_record(ROUNDS_CSV_HEADER)?;
        let mut summaries = Vec::with_capacity(args.sessions);
        for i in 0..args.sessions as u64 {
            let session =
                sim::run_session_with(&preset, &policies, sim::session_seed(args.seed, i), &options)
                    .map_err(|e| CliError::Usage(e.to_string()))?;
            session.write_rounds_csv(i, &mut rounds_writer)?;
            summaries.push(session.summary);
        }
        rounds_writer.flush()?;
        let summary = sim::summarize_sessions(&preset, args.seed, &summaries);
        write_json(&dir.join("summary.json"), &summary)?;
        summary
    } else {
        sim::run_batch_with(&preset, &policies, args.sessions, args.seed, &options)
            .map_err(|e| CliError::Usage(e.to_string()))?
    };

    println!(
        "{} | policy {} | {} sessions x {} rounds | seed {}",
        treatment, args.policy, summary.sessions, summary.rounds_per_session, summary.base_seed
    );
    println!(
        "overall {} (se {:.4}) | contestants {} | managers {}",
        percent(summary.overall_cheat_rate.mean),
        summary.overall_cheat_rate.stderr,
        percent(summary.contestant_cheat_rate.mean),
        percent(summary.manager_cheat_rate.mean),
    );
    println!(
        "mean effort {:.3} | over-dissipation {:.3} | matching {:.4} | caught|cheating {:.4} ({} of {})",
        summary.mean_effort.mean,
        summary.mean_over_dissipation.mean,
        summary.matching_probability.mean,
        summary.caught_rate_given_cheating,
        summary.caught_team_rounds,
        summary.cheating_team_rounds,
    );
    if let Some(dir) = &out_dir {
        println!("wrote {} and {}", dir.join("rounds.csv").display(), dir.join("summary.json").display());
    }
    Ok(())
}
