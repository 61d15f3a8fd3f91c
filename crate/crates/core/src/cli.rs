//! Command-line front end. The binary only forwards to [`run`].

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::families::{hmnu_chain, jprime_chain, jprime_terminal, matches_pattern, pattern_table, Family};
use crate::field::PrimeField;
use crate::ideal::Ideal;
use crate::inverse::{inverse_system, link_dual_generators, InverseSystem};
use crate::linkage::{
    direct_link, ferrand_cone, generic_ci, hf_link_identity, licci_greedy_search, verify_chain, CIType, ChainReport,
    ChainStepSpec, CompleteIntersection, SearchPolicy,
};
use crate::monomial::{MonomialOrder, OrderKind};
use crate::resolve::{betti_table, koszul_betti_oracle, BettiTable};
use crate::ring::{Ring, RingRef};
use crate::verify::{verify_paper, SuiteOptions};

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const VERIFICATION_FAILED: i32 = 1;
    pub const INPUT: i32 = 2;
    pub const GENERICITY: i32 = 3;
}

#[derive(Parser, Debug)]
#[command(name = "liaison", version, about = "Linkage of homogeneous ideals over a prime field")]
pub struct Cli {
    /// Characteristic of the coefficient field.
    #[arg(long, global = true, env = "LIAISON_MODULUS", default_value_t = PrimeField::DEFAULT_MODULUS)]
    pub modulus: u32,
    /// Comma-separated variable names, most significant first.
    #[arg(long, global = true, default_value = "x,y,z")]
    pub vars: String,
    /// grevlex or grlex.
    #[arg(long, global = true, default_value = "grevlex")]
    pub order: String,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

/// An ideal given inline or as a named family.
#[derive(Args, Debug, Clone)]
pub struct IdealSource {
    /// Generators, e.g. "x*z, y*z, z^12, x^4, y^7".
    pub ideal: Option<String>,
    /// One of I, J, L, Jprime.
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long, default_value_t = 4)]
    pub n: u32,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Betti table of R/I.
    Betti {
        #[command(flatten)]
        src: IdealSource,
        /// Use Koszul homology up to this degree instead of a resolution.
        #[arg(long)]
        j_max: Option<u32>,
    },
    /// Hilbert function of R/I.
    Hf {
        #[command(flatten)]
        src: IdealSource,
        #[arg(long)]
        j_max: Option<u32>,
    },
    /// The direct link C : I.
    Link {
        #[command(flatten)]
        src: IdealSource,
        /// Generators of C.
        #[arg(long, conflicts_with = "citype")]
        ci: Option<String>,
        /// A type such as 2,5,12; C is then random inside I.
        #[arg(long = "type")]
        citype: Option<String>,
        /// Also build the mapping cone and report its trimming.
        #[arg(long)]
        cone: bool,
    },
    /// The colon ideal I : J.
    Colon { i: String, j: String },
    /// A chain of links.
    Chain {
        #[command(flatten)]
        src: IdealSource,
        /// Each step is a type (2,5,12) or generators; repeat for several steps.
        #[arg(long = "step")]
        steps: Vec<String>,
        /// Use the explicit chain known for the family.
        #[arg(long)]
        paper_steps: bool,
        /// Search greedily for a chain ending at a complete intersection.
        #[arg(long, conflicts_with_all = ["steps", "paper_steps"])]
        search: bool,
        #[arg(long, default_value = "koszul-pair-first")]
        policy: String,
        #[arg(long, default_value_t = 6)]
        max_steps: usize,
    },
    /// The inverse system of an 𝔪-primary ideal, or of C : I via contraction.
    Inverse {
        #[command(flatten)]
        src: IdealSource,
        #[arg(long)]
        j_max: Option<u32>,
        /// Compute (C : I)^-1 from C^-1 for these generators of C.
        #[arg(long)]
        link_ci: Option<String>,
    },
    /// Print a family member.
    Family {
        name: String,
        #[arg(long, default_value_t = 4)]
        n: u32,
    },
    /// Run the reproduction suite.
    VerifyPaper {
        #[arg(long, default_value_t = 4)]
        n: u32,
        #[arg(long, default_value_t = 10)]
        ghost_links: usize,
        #[arg(long, default_value_t = 20)]
        random_ideals: usize,
    },
}

/// Rendered output and exit code.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { stdout, stderr: String::new(), code: exit::OK }
    }

    fn checked(stdout: String, passed: bool, why: String) -> Outcome {
        let code = if passed { exit::OK } else { exit::VERIFICATION_FAILED };
        Outcome { stdout, stderr: if passed { String::new() } else { why }, code }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e.root() {
        Error::Input(_) | Error::Parse { .. } | Error::Precondition(_) => exit::INPUT,
        Error::Genericity(_) => exit::GENERICITY,
        _ => exit::VERIFICATION_FAILED,
    }
}

fn ring_of(cli: &Cli) -> Result<RingRef> {
    let names: Vec<String> = cli.vars.split(',').map(|s| s.trim().to_string()).collect();
    let kind: OrderKind = cli.order.parse()?;
    let order = MonomialOrder::new(kind, names.len());
    Ring::new(names, PrimeField::new(cli.modulus)?, order)
}

fn load(ring: &RingRef, src: &IdealSource) -> Result<(Ideal, Option<Family>)> {
    match (&src.ideal, &src.family) {
        (Some(text), None) => Ok((Ideal::parse(ring, text)?, None)),
        (None, Some(f)) => {
            let f: Family = f.parse()?;
            Ok((f.build(ring, src.n)?, Some(f)))
        }
        (Some(_), Some(_)) => Err(Error::Input("give either an ideal or --family, not both".into())),
        (None, None) => Err(Error::Input("no ideal given; pass generators or --family".into())),
    }
}

fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(|g| g.to_string()).collect()
}

fn diff_text(got: &BettiTable, want: &BettiTable) -> String {
    let mut s = String::from("Betti table differs from the expected one (i, j, computed, expected):\n");
    for (i, j, a, b) in got.diff(want) {
        let _ = writeln!(s, "  ({i}, {j}): {a} != {b}");
    }
    s
}

fn betti(cli: &Cli, src: &IdealSource, j_max: Option<u32>) -> Result<Outcome> {
    let ring = ring_of(cli)?;
    let (ideal, family) = load(&ring, src)?;
    let (table, complete) = match j_max {
        Some(j) => {
            let o = koszul_betti_oracle(&ideal, Some(j));
            (o.table, Some(o.complete))
        }
        None => (betti_table(&ideal)?, None),
    };
    let expected = family.and_then(Family::expected_pattern);
    let verdict = expected.map(|p| matches_pattern(&table, p, src.n).matched);
    let out = if cli.json {
        let mut v = table.to_json_value();
        if let Some(c) = complete {
            v["complete"] = json!(c);
        }
        if let Some(ok) = verdict {
            v["matches_expected"] = json!(ok);
        }
        format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
    } else {
        let mut s = table.to_string();
        if complete == Some(false) {
            s.push_str("(entries beyond --j-max may be missing)\n");
        }
        s
    };
    match (expected, verdict) {
        (Some(p), Some(ok)) => Ok(Outcome::checked(out, ok, diff_text(&table, &pattern_table(p, src.n, 0, 0)))),
        _ => Ok(Outcome::ok(out)),
    }
}

fn hf(cli: &Cli, src: &IdealSource, j_max: Option<u32>) -> Result<Outcome> {
    let ring = ring_of(cli)?;
    let (ideal, _) = load(&ring, src)?;
    let top = match j_max {
        Some(j) => j,
        None if ideal.is_m_primary() => ideal.top_degree()? + 1,
        None => 20,
    };
    let h = ideal.hilbert_function(top);
    let out = if cli.json {
        let v = json!({"values": h.values, "series_numerator": h.numerator});
        format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
    } else {
        let vals: Vec<String> = strings(&h.values);
        format!("HF(0..={top}): {}\nnumerator: {:?}\n", vals.join(" "), h.numerator)
    };
    Ok(Outcome::ok(out))
}

fn pick_ci(ring: &RingRef, ideal: &Ideal, ci: &Option<String>, ty: &Option<String>, seed: u64) -> Result<CompleteIntersection> {
    match (ci, ty) {
        (Some(g), _) => CompleteIntersection::parse(ring, g),
        (None, Some(t)) => {
            let degs = t
                .split(',')
                .map(|p| p.trim().parse::<u32>().map_err(|e| Error::Input(format!("bad type {t:?}: {e}"))))
                .collect::<Result<Vec<_>>>()?;
            generic_ci(ideal, &CIType::new(degs)?, seed)
        }
        (None, None) => Err(Error::Input("give --ci or --type".into())),
    }
}

fn link(cli: &Cli, src: &IdealSource, ci: &Option<String>, ty: &Option<String>, cone: bool) -> Result<Outcome> {
    let ring = ring_of(cli)?;
    let (ideal, _) = load(&ring, src)?;
    let c = pick_ci(&ring, &ideal, ci, ty, cli.seed)?;
    let link = direct_link(&c, &ideal)?.minimalized();
    let table = betti_table(&link)?;
    let identity = hf_link_identity(&c, &ideal, &link);
    let cone = if cone { Some(ferrand_cone(&ideal, &c)?) } else { None };
    let consistent = cone.as_ref().map(|k| k.betti_table().same_entries(&table) && k.trims.consistent());
    let out = if cli.json {
        let mut v = json!({
            "ci": strings(c.gens()),
            "type": c.citype().degrees(),
            "link": strings(link.gens()),
            "betti": table.to_json_value(),
        });
        if let Some(b) = identity {
            v["hf_link_identity"] = json!(b);
        }
        if let Some(k) = &cone {
            v["trims"] = serde_json::to_value(&k.trims).expect("json");
            v["cone_betti"] = k.betti_table().to_json_value();
        }
        format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
    } else {
        let mut s = format!("C = {c}, type {}\nC : I = ({link})\n{table}", c.citype());
        if let Some(b) = identity {
            let _ = writeln!(s, "HF link identity: {}", if b { "holds" } else { "FAILS" });
        }
        if let Some(k) = &cone {
            let t = &k.trims;
            let _ = writeln!(s, "untrimmed cone:\n{}", k.raw_table());
            let _ = writeln!(s, "unit rows of d3 {:?}, generators of C minimal in I {:?} (rank {})", t.d3_unit_rows, t.shared_generators, t.shared_rank);
            let _ = writeln!(s, "unit rows of d2 {:?}, minimal Koszul pairs of C in I {:?}", t.d2_unit_rows, t.koszul_pairs);
        }
        s
    };
    let passed = identity != Some(false) && consistent != Some(false);
    Ok(Outcome::checked(out, passed, "link identities failed\n".into()))
}

fn colon(cli: &Cli, i: &str, j: &str) -> Result<Outcome> {
    let ring = ring_of(cli)?;
    let q = Ideal::parse(&ring, i)?.colon(&Ideal::parse(&ring, j)?)?.minimalized();
    let out = if cli.json {
        format!("{}\n", serde_json::to_string_pretty(&json!({"generators": strings(q.gens())})).expect("json"))
    } else {
        format!("{q}\n")
    };
    Ok(Outcome::ok(out))
}

fn render_chain(cli: &Cli, rep: &ChainReport) -> String {
    if cli.json {
        return format!("{}\n", rep.to_json());
    }
    let mut s = format!("start: ({})\n", rep.start.join(", "));
    for (k, st) in rep.steps.iter().enumerate() {
        let _ = writeln!(s, "step {}: C = ({}) of type {}", k + 1, st.ci.join(", "), st.citype);
        let _ = writeln!(s, "  link: ({})", st.link.join(", "));
        let _ = writeln!(s, "  λ = {}, grade jumps {:?}", st.lambda, st.grade_jumps);
        let _ = write!(s, "{}", st.betti);
    }
    let _ = writeln!(s, "sequentially bounded: {}\nterminal is a complete intersection: {}", rep.sequentially_bounded, rep.terminal_is_ci);
    s
}

#[allow(clippy::too_many_arguments)]
fn chain(
    cli: &Cli,
    src: &IdealSource,
    steps: &[String],
    paper_steps: bool,
    search: bool,
    policy: &str,
    max_steps: usize,
) -> Result<Outcome> {
    let ring = ring_of(cli)?;
    let (ideal, family) = load(&ring, src)?;
    if search {
        let out = licci_greedy_search(&ideal, max_steps, policy.parse::<SearchPolicy>()?, cli.seed)?;
        let mut text = render_chain(cli, &out.report);
        if !out.reached_ci && !cli.json {
            text.push_str("no complete intersection reached within the step budget (inconclusive)\n");
        }
        return Ok(Outcome::ok(text));
    }
    if paper_steps {
        let (cis, terminal) = match family {
            Some(Family::Jprime) => (jprime_chain(&ring, src.n)?, Some(jprime_terminal(&ring, src.n)?)),
            Some(Family::L) => (hmnu_chain(&ring, src.n)?, None),
            _ => return Err(Error::Input("--paper-steps needs --family Jprime or --family L".into())),
        };
        let specs: Vec<ChainStepSpec> = cis.iter().map(|c| ChainStepSpec::Explicit(c.gens().to_vec())).collect();
        let (rep, last) = verify_chain(&ideal, &specs, cli.seed)?;
        let text = render_chain(cli, &rep);
        let passed = match terminal {
            Some(t) => rep.sequentially_bounded && rep.terminal_is_ci && last.same_ideal(t.ideal()),
            None => rep.terminal_is_ci,
        } && rep.hf_identities_hold();
        return Ok(Outcome::checked(text, passed, format!("chain did not end as expected at ({last})\n")));
    }
    if steps.is_empty() {
        return Err(Error::Input("give --step, --paper-steps or --search".into()));
    }
    let specs = steps.iter().map(|s| ChainStepSpec::parse(&ring, s)).collect::<Result<Vec<_>>>()?;
    let (rep, _) = verify_chain(&ideal, &specs, cli.seed)?;
    let passed = rep.hf_identities_hold();
    Ok(Outcome::checked(render_chain(cli, &rep), passed, "HF link identity failed\n".into()))
}

fn render_inverse(cli: &Cli, m: &InverseSystem) -> String {
    let gens = strings(&m.minimal_generators());
    let top = m.top_degree().map_or(-1, |t| t as i64);
    let dims: Vec<usize> = (0..=top).map(|j| m.dim(j)).collect();
    if cli.json {
        format!("{}\n", serde_json::to_string_pretty(&json!({"generators": gens, "dimensions": dims})).expect("json"))
    } else {
        format!("<{}>\ndimensions: {:?}\n", gens.join(", "), dims)
    }
}

fn inverse(cli: &Cli, src: &IdealSource, j_max: Option<u32>, link_ci: &Option<String>) -> Result<Outcome> {
    let ring = ring_of(cli)?;
    let (ideal, _) = load(&ring, src)?;
    let m = match link_ci {
        Some(g) => link_dual_generators(&CompleteIntersection::parse(&ring, g)?, &ideal)?,
        None => inverse_system(&ideal, j_max)?,
    };
    Ok(Outcome::ok(render_inverse(cli, &m)))
}

fn family(cli: &Cli, name: &str, n: u32) -> Result<Outcome> {
    let ring = ring_of(cli)?;
    let f: Family = name.parse()?;
    let i = f.build(&ring, n)?;
    let out = if cli.json {
        let v: Value = json!({"family": f.to_string(), "n": n, "generators": strings(i.gens())});
        format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
    } else {
        format!("{i}\n")
    };
    Ok(Outcome::ok(out))
}

fn verify(cli: &Cli, n: u32, ghost_links: usize, random_ideals: usize) -> Result<Outcome> {
    let ring = ring_of(cli)?;
    if ring.nvars() != 3 {
        return Err(Error::Input("verify-paper runs in three variables".into()));
    }
    let rep = verify_paper(&ring, SuiteOptions { n, seed: cli.seed, ghost_links, random_ideals });
    let out = if cli.json { format!("{}\n", rep.to_json()) } else { rep.to_string() };
    let why: String = rep.failures().map(|c| format!("criterion {}: {}: {}\n", c.criterion, c.label, c.detail)).collect();
    Ok(Outcome::checked(out, rep.all_passed(), why))
}

/// Runs a parsed command.
pub fn execute(cli: &Cli) -> Outcome {
    let r = match &cli.command {
        Command::Betti { src, j_max } => betti(cli, src, *j_max),
        Command::Hf { src, j_max } => hf(cli, src, *j_max),
        Command::Link { src, ci, citype, cone } => link(cli, src, ci, citype, *cone),
        Command::Colon { i, j } => colon(cli, i, j),
        Command::Chain { src, steps, paper_steps, search, policy, max_steps } => {
            chain(cli, src, steps, *paper_steps, *search, policy, *max_steps)
        }
        Command::Inverse { src, j_max, link_ci } => inverse(cli, src, *j_max, link_ci),
        Command::Family { name, n } => family(cli, name, *n),
        Command::VerifyPaper { n, ghost_links, random_ideals } => verify(cli, *n, *ghost_links, *random_ideals),
    };
    r.unwrap_or_else(|e| Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: exit_code(&e) })
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let code = if e.use_stderr() { exit::INPUT } else { exit::OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: text, code }
            } else {
                Outcome::ok(text)
            }
        }
    }
}
