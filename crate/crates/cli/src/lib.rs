//! Command-line front end for `cayley-lift-core`.
//!
//! Every verb is a thin adapter over one library call. Output is either
//! conventional mathematical text (optionally preceded by a one-line header) or JSON with
//! a top-level `"schema": "cayley-lift/1"` field. Output is deterministic.
//!
//! Exit codes: `0` success, `1` verification failure, `2` usage or input
//! error, `3` request outside the supported scope.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use cayley_lift_core::cartan;
use cayley_lift_core::coherent;
use cayley_lift_core::klv_poset::{self, ParameterPoset};
use cayley_lift_core::lifting;
use cayley_lift_core::parameters::{self, CentralCharacterLabel, PairSetParameter};
use cayley_lift_core::root_system::{half_integral_roots, integral_positive_roots, integral_system};
use cayley_lift_core::{Error, Family, GroupFamily, RootSystem, SCHEMA};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_SCOPE: i32 = 3;

const EXIT_HELP: &str = "Exit codes:\n  0  success\n  1  verification failure (a certificate, count or theorem check failed)\n  2  usage error or invalid input\n  3  request outside the supported scope or resource cap";

#[derive(Debug, Parser)]
#[command(name = "cayley-lift", version, about = "Small genuine representations of split simply-laced double covers at infinitesimal character ρ/2", after_help = EXIT_HELP)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Suppress the metadata header line in text output.
    #[arg(long, global = true)]
    pub no_header: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyFlag {
    A,
    D,
    E6,
    E7,
    E8,
}

#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    /// Root system family.
    #[arg(long, value_enum, ignore_case = true)]
    pub family: FamilyFlag,

    /// For A: the matrix size n of SL(n,R). For D: n for Spin(n,n). Not
    /// used for E.
    #[arg(long)]
    pub rank: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct ChiArgs {
    #[command(flatten)]
    pub family: FamilyArgs,

    /// Index of the genuine central character (0-based).
    #[arg(long, default_value_t = 0)]
    pub chi: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Root system data: simple and positive roots, ρ, ρ/2.
    Roots(FamilyArgs),
    /// Cartan classes with torus shapes and their Hasse diagram.
    Cartans(FamilyArgs),
    /// Lattice quotient, center of the cover, genuine central characters.
    Centers(FamilyArgs),
    /// Parameters: the block (A, D) or orbit representatives (E), and Π_{R_D}.
    Params(ChiArgs),
    /// Number of small genuine representations at ρ/2.
    CountSmall(FamilyArgs),
    /// Replay a shipped witness certificate.
    ReplayWitness {
        /// Witness identifier, e.g. E6-030 or E7-320.
        #[arg(long)]
        id: String,
    },
    /// Check M·m = Id on the R_D posets.
    KlvCheck(ChiArgs),
    /// Lift of the trivial representation.
    Lift(FamilyArgs),
    /// Verify the main theorem for a family.
    Verify(FamilyArgs),
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    if e.is_verification_failure() {
        EXIT_VERIFICATION
    } else {
        match e {
            Error::Scope(_) | Error::Resource { .. } | Error::Family { .. } => EXIT_SCOPE,
            _ => EXIT_USAGE,
        }
    }
}

/// Resolves `--family`/`--rank` into a [`GroupFamily`].
pub fn group_family(args: &FamilyArgs) -> Result<GroupFamily, Error> {
    let need_rank = || args.rank.ok_or_else(|| Error::Configuration("--rank is required for families A and D".into()));
    let e = |r: usize| {
        if args.rank.is_some_and(|x| x != r) {
            return Err(Error::Configuration(format!("--rank does not apply to E{r}")));
        }
        GroupFamily::e(r)
    };
    match args.family {
        FamilyFlag::A => GroupFamily::sl(need_rank()?),
        FamilyFlag::D => GroupFamily::spin(need_rank()?),
        FamilyFlag::E6 => e(6),
        FamilyFlag::E7 => e(7),
        FamilyFlag::E8 => e(8),
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Output { code, stdout: text, stderr: String::new() }
            } else {
                Output { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match dispatch(&cli) {
        Ok((code, stdout)) => Output { code, stdout, stderr: String::new() },
        Err(e) => Output { code: exit_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

struct Rendered {
    verb: &'static str,
    subject: String,
    text: String,
    json: serde_json::Value,
    code: i32,
}

fn dispatch(cli: &Cli) -> Result<(i32, String), Error> {
    let r = match &cli.command {
        Command::Roots(a) => roots(group_family(a)?)?,
        Command::Cartans(a) => cartans(group_family(a)?)?,
        Command::Centers(a) => centers(group_family(a)?)?,
        Command::Params(a) => params(group_family(&a.family)?, a.chi)?,
        Command::CountSmall(a) => count_small(group_family(a)?)?,
        Command::ReplayWitness { id } => replay(id)?,
        Command::KlvCheck(a) => klv_check(group_family(&a.family)?, a.chi)?,
        Command::Lift(a) => lift(group_family(a)?)?,
        Command::Verify(a) => verify(group_family(a)?)?,
    };
    let out = match cli.format {
        Format::Json => {
            let mut v = json!({ "schema": SCHEMA, "command": r.verb, "subject": r.subject });
            v["result"] = r.json;
            let mut s = serde_json::to_string_pretty(&v).map_err(|e| Error::Consistency(e.to_string()))?;
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = String::new();
            if !cli.no_header {
                s.push_str(&format!("# cayley-lift {} | {} | {}\n", env!("CARGO_PKG_VERSION"), r.verb, r.subject));
            }
            s.push_str(&r.text);
            if !s.ends_with('\n') {
                s.push('\n');
            }
            s
        }
    };
    Ok((r.code, out))
}

fn to_json<T: Serialize>(v: &T) -> Result<serde_json::Value, Error> {
    serde_json::to_value(v).map_err(|e| Error::Consistency(e.to_string()))
}

fn roots(f: GroupFamily) -> Result<Rendered, Error> {
    let sys = RootSystem::new(f)?;
    let lambda = sys.half_rho();
    let integral = integral_system(&lambda, &sys)?;
    let simple: Vec<String> = sys.simple_indices().iter().map(|&i| sys.root_label(i)).collect();
    let fmt = |w: &[cayley_lift_core::Rational]| {
        let v: Vec<String> = w.iter().map(cayley_lift_core::rational::format_rational).collect();
        format!("({})", v.join(", "))
    };
    let mut text = format!(
        "{}, root system {}\nroots: {}, positive: {}\nsimple roots: {}\nρ = {}\nρ/2 = {}\n",
        f.group_name(),
        f.label(),
        sys.len(),
        sys.num_positive(),
        simple.join(", "),
        fmt(sys.rho().coords()),
        fmt(lambda.coords()),
    );
    text.push_str(&format!(
        "Δ⁺ at ρ/2: {} integral + {} half-integral; integral system {}\n",
        integral_positive_roots(&sys).len(),
        half_integral_roots(&sys).len(),
        integral.dynkin_type(&sys)
    ));
    Ok(Rendered { verb: "roots", subject: f.group_name(), text, json: to_json(&sys.to_json())?, code: EXIT_OK })
}

fn cartans(f: GroupFamily) -> Result<Rendered, Error> {
    let sys = RootSystem::new(f)?;
    let h = cartan::hasse_diagram(&sys)?;
    let text = format!("{} classes of Cartan subgroups, by real rank:\n{}", h.classes.len(), h.render_text());
    Ok(Rendered { verb: "cartans", subject: f.group_name(), text, json: to_json(&h)?, code: EXIT_OK })
}

fn centers(f: GroupFamily) -> Result<Rendered, Error> {
    let sys = RootSystem::new(f)?;
    let q = cartan::lattice_quotient(&sys)?;
    let z = cartan::cover_center(&sys)?;
    let n = cartan::genuine_central_character_count(&sys)?;
    let classes: Vec<String> = q
        .classes
        .iter()
        .map(|c| format!("({})", c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    let text = format!(
        "[2P∨ ∩ R∨]/2R∨ has order {} (classes in simple-coroot coordinates: {})\nZ(G̃) ≅ {}\ngenuine central characters: {}\n",
        q.order,
        classes.join(", "),
        z,
        n
    );
    let json = json!({ "lattice_quotient": to_json(&q)?, "center": z.to_string(), "center_invariant_factors": z.invariant_factors, "genuine_central_characters": n });
    Ok(Rendered { verb: "centers", subject: f.group_name(), text, json, code: EXIT_OK })
}

#[derive(Serialize)]
struct ParamRow {
    parameter: PairSetParameter,
    length: String,
    cartan: String,
}

fn params(f: GroupFamily, chi: usize) -> Result<Rendered, Error> {
    let sys = RootSystem::new(f)?;
    let chi = CentralCharacterLabel::new(&sys, chi)?;
    let list: Vec<PairSetParameter> = match f.family() {
        Family::E => parameters::class_representatives(&sys, chi)?.into_iter().map(|(_, p)| p).collect(),
        _ => parameters::enumerate_block(&sys, chi, 1_000_000)?,
    };
    let heading = if f.family() == Family::E { "orbit representatives" } else { "block" };
    let mut rows = Vec::new();
    let mut text = format!("{heading} for central character {} ({} parameters):\n", chi.index, list.len());
    for p in &list {
        let l = cayley_lift_core::rational::format_rational(&parameters::length(&sys, p)?);
        let c = p.cartan_class(&sys)?.label();
        text.push_str(&format!("  {}  ℓ = {}  {}\n", p.render(), l, c));
        rows.push(ParamRow { parameter: p.clone(), length: l, cartan: c });
    }
    let pi = parameters::pi_rd(&sys, chi)?;
    text.push_str(&format!(
        "Π_R_D: {}\n",
        pi.iter().map(|p| p.render()).collect::<Vec<_>>().join(", ")
    ));
    let json = json!({ "central_char": chi.index, "kind": heading, "parameters": to_json(&rows)?, "pi_rd": to_json(&pi)?, "rd_sets": to_json(&parameters::rd_sets(f))? });
    Ok(Rendered { verb: "params", subject: f.group_name(), text, json, code: EXIT_OK })
}

fn count_small(f: GroupFamily) -> Result<Rendered, Error> {
    let r = coherent::count_small(f)?;
    Ok(Rendered { verb: "count-small", subject: f.group_name(), text: format!("{}\n", r.value), json: to_json(&r)?, code: EXIT_OK })
}

fn replay(id: &str) -> Result<Rendered, Error> {
    let c = coherent::replay_witness(id)?;
    let w = coherent::find_witness(id)?;
    let text = format!("witness {id}: {}\n{}", w.element, c.render_text());
    Ok(Rendered { verb: "replay-witness", subject: id.to_string(), text, json: to_json(&c)?, code: EXIT_OK })
}

fn klv_check(f: GroupFamily, chi: usize) -> Result<Rendered, Error> {
    let sys = RootSystem::new(f)?;
    let chi = CentralCharacterLabel::new(&sys, chi)?;
    let poset = ParameterPoset::rd_poset(&sys, chi)?;
    let mut checks = Vec::new();
    let mut towers = Vec::new();
    let mut text = format!("poset of {} parameters\n", poset.len());
    for (set, star) in parameters::rd_sets(f).iter().zip(klv_poset::gamma_star_catalog(&sys, chi)?) {
        let c = klv_poset::verify_inversion(&sys, &poset, &star)?;
        let t = klv_poset::tower_matrices(&sys, chi, set)?;
        text.push_str(&format!(
            "γ* = {}: M·m = Id on {} rows × {} columns: {}; tower matrix product is identity: {}\n",
            c.gamma_star,
            c.rows_checked,
            c.columns_checked,
            if c.holds { "pass" } else { "FAIL" },
            t.is_identity()
        ));
        checks.push(c);
        towers.push(t);
    }
    if checks.is_empty() {
        text.push_str("no nonempty S ∈ R_D; nothing to check\n");
    }
    let ok = checks.iter().all(|c| c.holds) && towers.iter().all(|t| t.is_identity());
    let json = json!({ "poset": to_json(&poset)?, "checks": to_json(&checks)?, "towers": to_json(&towers)?, "passed": ok });
    Ok(Rendered {
        verb: "klv-check",
        subject: f.group_name(),
        text,
        json,
        code: if ok { EXIT_OK } else { EXIT_VERIFICATION },
    })
}

fn lift(f: GroupFamily) -> Result<Rendered, Error> {
    let l = lifting::lift_trivial(f)?;
    Ok(Rendered { verb: "lift", subject: f.group_name(), text: format!("{}\n", l.text), json: to_json(&l)?, code: EXIT_OK })
}

fn verify(f: GroupFamily) -> Result<Rendered, Error> {
    let r = lifting::main_theorem_report(f)?;
    let mut text = String::new();
    for c in &r.checks {
        text.push_str(&format!("{} {}: {}\n", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail));
    }
    text.push_str(if r.passed { "main theorem verified\n" } else { "main theorem check FAILED\n" });
    Ok(Rendered {
        verb: "verify",
        subject: f.group_name(),
        text,
        json: to_json(&r)?,
        code: if r.passed { EXIT_OK } else { EXIT_VERIFICATION },
    })
}
