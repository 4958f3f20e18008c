//! The `quandle` command-line tool.
//!
//! Exit codes: 0 on success, 1 on input errors (including invalid quandle
//! files), 2 when a property verification fails.

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::constructions::{
    self, alexander, conj_class, conjugation, dihedral, phi_space, section5_example, trivial,
    unipotent_class_quandle, vedernikov, AlexanderParam, Construction,
};
use crate::error::{Error, Result};
use crate::group::{matrix_group_sl2, FiniteGroup, GroupAutomorphism, GroupFile, DEFAULT_CAP};
use crate::knots::{count_colorings, parse_braid, parse_pd, KnotDiagram};
use crate::quandle::{FiniteQuandle, QuandleFile};
use crate::regularity::{implication_survey, isolated_connected_consequence, regularity_report};
use crate::symmetry::{
    aut, inn, is_connected, iso_search, orbits, sbar_hom, tr, tr_is_normal, ActionFile, Realizer,
};
use crate::{corpus, par};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "quandle", version, about = "Finite quandles: constructions, symmetry groups, orbits and knot colorings")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (0 = one per core). Results do not depend on it.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Cap on enumerated group elements; defaults to QUANDLE_CAP or 1000000.
    #[arg(long, global = true)]
    cap: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a quandle from a family and print it as JSON.
    Make(MakeArgs),
    /// Validate a quandle file.
    Check { file: PathBuf },
    /// Inn(Q)-orbits with witness words.
    Orbits { file: PathBuf },
    /// The inner automorphism group.
    Inn { file: PathBuf },
    /// The transvection group.
    Tr { file: PathBuf },
    /// Connectedness with a certificate.
    Connected { file: PathBuf },
    /// The automorphism group of a quandle with at most 64 elements.
    Aut { file: PathBuf },
    /// Search for an isomorphism between two quandles.
    Iso { first: PathBuf, second: PathBuf },
    /// Realize the orbit of a basepoint as a coset quandle of Tr(Q).
    Realize {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        base: usize,
        /// Also verify the inter-orbit action towards this point.
        #[arg(long)]
        target: Option<usize>,
    },
    /// The map x ↦ s_x s_q⁻¹ into Inn(Q).
    Sbar {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        base: usize,
    },
    /// Regularity flags and fixed-point sets.
    Report { file: PathBuf },
    /// Implication survey over a directory of quandle files, or over the
    /// built-in corpus when no directory is given.
    Survey { dir: Option<PathBuf> },
    /// Count colorings of a knot diagram.
    Color(ColorArgs),
    /// Compare Op and Tr orbits of a quandle action.
    Action { file: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Trivial,
    Dihedral,
    Alexander,
    Section5,
    Unipotent,
    Conj,
    ConjClass,
    PhiSpace,
    Vedernikov,
    Cocycle,
}

#[derive(Args, Debug)]
struct MakeArgs {
    family: FamilyArg,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    p: Option<u32>,
    /// Alexander parameter: a scalar, or matrix rows like "1,2;0,1".
    #[arg(long)]
    a: Option<String>,
    /// cyclic:N, symmetric:K, sl2:P, or a group JSON file.
    #[arg(long)]
    group: Option<String>,
    /// identity, inverse, inner:ELEMENT, or a JSON file with {"map": [...]}.
    #[arg(long)]
    phi: Option<String>,
    /// Comma-separated element indices, or "fixed" for the whole fixed subgroup.
    #[arg(long)]
    subgroup: Option<String>,
    /// Element index or label.
    #[arg(long)]
    element: Option<String>,
    /// Size of the base set of a cocycle extension.
    #[arg(long)]
    x: Option<usize>,
    /// JSON file with the cocycle table.
    #[arg(long)]
    cocycle: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ColorArgs {
    /// PD code file.
    #[arg(long, conflicts_with = "braid", required_unless_present = "braid")]
    diagram: Option<PathBuf>,
    /// Braid word such as "s1 s2' s1".
    #[arg(long)]
    braid: Option<String>,
    #[arg(long, default_value_t = 1)]
    strands: usize,
    #[arg(long)]
    quandle: PathBuf,
    /// Also count colorings inside each Inn(Q)-orbit.
    #[arg(long)]
    by_orbit: bool,
}

struct Outcome {
    json: Value,
    text: String,
    status: i32,
}

impl Outcome {
    fn ok(json: Value, text: String) -> Outcome {
        Outcome {
            json,
            text,
            status: EXIT_OK,
        }
    }
}

struct Ctx {
    cap: usize,
    seed: u64,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let cap = match resolve_cap(cli.cap) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INPUT;
        }
    };
    let ctx = Ctx { cap, seed: cli.seed };
    let json_mode = cli.json;
    let command = cli.command;
    let result = par::with_threads(cli.threads, || dispatch(command, &ctx));
    match result {
        Ok(o) => {
            let written = if json_mode {
                writeln!(out, "{}", serde_json::to_string_pretty(&o.json).expect("values serialize"))
            } else {
                write!(out, "{}", o.text)
            };
            if written.is_err() {
                return EXIT_INPUT;
            }
            o.status
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if let Error::Axioms(v) = &e {
                for w in v {
                    let _ = writeln!(err, "  {w}");
                }
            }
            EXIT_INPUT
        }
    }
}

fn resolve_cap(flag: Option<usize>) -> Result<usize> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match std::env::var("QUANDLE_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Shape(format!("QUANDLE_CAP must be a positive integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

fn read_text(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

fn load_quandle(path: &Path) -> Result<(FiniteQuandle, Option<Vec<String>>)> {
    QuandleFile::parse(&read_text(path)?)
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn dispatch(command: Command, ctx: &Ctx) -> Result<Outcome> {
    match command {
        Command::Make(args) => make(args, ctx),
        Command::Check { file } => check(&file),
        Command::Orbits { file } => cmd_orbits(&file),
        Command::Inn { file } => cmd_group(&file, ctx, false),
        Command::Tr { file } => cmd_group(&file, ctx, true),
        Command::Connected { file } => cmd_connected(&file),
        Command::Aut { file } => cmd_aut(&file),
        Command::Iso { first, second } => cmd_iso(&first, &second),
        Command::Realize { file, base, target } => cmd_realize(&file, base, target, ctx),
        Command::Sbar { file, base } => cmd_sbar(&file, base, ctx),
        Command::Report { file } => cmd_report(&file, ctx),
        Command::Survey { dir } => cmd_survey(dir.as_deref(), ctx),
        Command::Color(args) => cmd_color(args),
        Command::Action { file } => cmd_action(&file, ctx),
    }
}

fn need<T>(v: Option<T>, flag: &str, family: &str) -> Result<T> {
    v.ok_or_else(|| Error::Shape(format!("--{flag} is required for {family}")))
}

fn parse_group(spec: &str) -> Result<FiniteGroup> {
    let bad = || Error::Shape(format!("bad group size in {spec:?}"));
    if let Some(n) = spec.strip_prefix("cyclic:") {
        let n: usize = n.parse().map_err(|_| bad())?;
        if n == 0 || n > constructions::MAX_CARRIER {
            return Err(bad());
        }
        return Ok(FiniteGroup::cyclic(n));
    }
    if let Some(k) = spec.strip_prefix("symmetric:") {
        let k: usize = k.parse().map_err(|_| bad())?;
        if k == 0 || k > 6 {
            return Err(Error::Shape("symmetric groups are built for 1 ≤ k ≤ 6".into()));
        }
        return Ok(FiniteGroup::symmetric(k));
    }
    if let Some(p) = spec.strip_prefix("sl2:") {
        let p: u32 = p.parse().map_err(|_| bad())?;
        return Ok(matrix_group_sl2(p)?.0);
    }
    GroupFile::parse(&read_text(Path::new(spec))?)
}

fn parse_element(g: &FiniteGroup, spec: &str) -> Result<usize> {
    if let Ok(i) = spec.trim().parse::<usize>() {
        if i >= g.order() {
            return Err(Error::Index {
                index: i,
                size: g.order(),
            });
        }
        return Ok(i);
    }
    g.labels()
        .iter()
        .position(|l| l == spec)
        .ok_or_else(|| Error::Shape(format!("no element labelled {spec:?}")))
}

fn parse_phi(g: &FiniteGroup, spec: &str) -> Result<GroupAutomorphism> {
    match spec {
        "identity" => Ok(GroupAutomorphism::identity(g)),
        "inverse" => GroupAutomorphism::new(g, (0..g.order()).map(|x| g.inv(x)).collect()),
        _ => {
            if let Some(e) = spec.strip_prefix("inner:") {
                return Ok(GroupAutomorphism::inner(g, parse_element(g, e)?));
            }
            let v: Value = serde_json::from_str(&read_text(Path::new(spec))?)?;
            let map = v.get("map").cloned().unwrap_or(v);
            GroupAutomorphism::new(g, serde_json::from_value(map)?)
        }
    }
}

fn parse_alexander_param(spec: &str) -> Result<AlexanderParam> {
    let num = |s: &str| {
        s.trim()
            .parse::<u32>()
            .map_err(|_| Error::Shape(format!("bad Alexander entry {s:?}")))
    };
    if !spec.contains([',', ';']) {
        return Ok(AlexanderParam::Scalar(num(spec)?));
    }
    let rows = spec
        .split(';')
        .map(|row| row.split(',').map(num).collect::<Result<Vec<u32>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(AlexanderParam::Matrix(rows))
}

fn make(args: MakeArgs, ctx: &Ctx) -> Result<Outcome> {
    use FamilyArg::*;
    let name = format!("{:?}", args.family).to_lowercase();
    let group = || parse_group(&need(args.group.clone(), "group", &name)?);
    let c: Construction = match args.family {
        Trivial => trivial(need(args.n, "n", &name)?)?,
        Dihedral => dihedral(need(args.n, "n", &name)?)?,
        Alexander => {
            let a = parse_alexander_param(&need(args.a.clone(), "a", &name)?)?;
            alexander(need(args.p, "p", &name)?, args.n.unwrap_or(1), &a)?
        }
        Section5 => section5_example(need(args.p, "p", &name)?, need(args.n, "n", &name)?)?,
        Unipotent => unipotent_class_quandle(need(args.p, "p", &name)?)?,
        Conj => conjugation(&group()?)?,
        ConjClass => {
            let g = group()?;
            let e = parse_element(&g, &need(args.element.clone(), "element", &name)?)?;
            conj_class(&g, e)?
        }
        PhiSpace => {
            let g = group()?;
            let phi = parse_phi(&g, &need(args.phi.clone(), "phi", &name)?)?;
            let h = match args.subgroup.as_deref() {
                None => vec![g.identity()],
                Some("fixed") => phi.fixed_subgroup(&g),
                Some(list) => list
                    .split(',')
                    .map(|s| parse_element(&g, s.trim()))
                    .collect::<Result<Vec<_>>>()?,
            };
            phi_space(&g, &phi, &h, ctx.seed)?
        }
        Vedernikov => {
            let g = group()?;
            let phi = parse_phi(&g, &need(args.phi.clone(), "phi", &name)?)?;
            vedernikov(&g, &phi)?
        }
        Cocycle => {
            let g = group()?;
            let x = need(args.x, "x", &name)?;
            let table: Vec<Vec<usize>> =
                serde_json::from_str(&read_text(&need(args.cocycle.clone(), "cocycle", &name)?)?)?;
            constructions::cocycle_extension(x, &g, &table)?
        }
    };
    let file = to_value(&c.to_file());
    let text = serde_json::to_string_pretty(&file).expect("values serialize") + "\n";
    Ok(Outcome::ok(file, text))
}

fn check(file: &Path) -> Result<Outcome> {
    let (q, _) = load_quandle(file)?;
    Ok(Outcome::ok(
        json!({ "valid": true, "size": q.size() }),
        format!("valid (size {})\n", q.size()),
    ))
}

fn cmd_orbits(file: &Path) -> Result<Outcome> {
    let (q, _) = load_quandle(file)?;
    let d = orbits(&q);
    let mut text = format!("{} orbit(s)\n", d.len());
    for (i, o) in d.orbits.iter().enumerate() {
        let _ = writeln!(text, "  orbit {i} (base {}, size {}): {}", d.bases[i], o.len(), join(o));
    }
    Ok(Outcome::ok(to_value(&d), text))
}

fn cmd_group(file: &Path, ctx: &Ctx, transvections: bool) -> Result<Outcome> {
    let (q, _) = load_quandle(file)?;
    let g = if transvections { tr(&q, ctx.cap)? } else { inn(&q, ctx.cap)? };
    let gens: Vec<String> = g.generators().iter().map(|p| p.to_string()).collect();
    let orbit_list = g.orbits();
    let mut j = json!({
        "order": g.order(),
        "transitive": g.is_transitive(),
        "orbits": orbit_list,
        "generators": gens,
    });
    let mut text = format!("order: {}\ntransitive: {}\n", g.order(), g.is_transitive());
    if transvections {
        let normal = tr_is_normal(&q, &g);
        j["normal_in_inn"] = json!(normal);
        let _ = writeln!(text, "normal in Inn: {normal}");
    }
    let _ = writeln!(text, "orbits: {}", orbit_list.len());
    let _ = writeln!(text, "generators: {}", gens.len());
    for s in &gens {
        let _ = writeln!(text, "  {s}");
    }
    Ok(Outcome::ok(j, text))
}

fn cmd_connected(file: &Path) -> Result<Outcome> {
    let (q, _) = load_quandle(file)?;
    let c = is_connected(&q);
    Ok(Outcome::ok(to_value(&c), format!("connected: {}\n", c.connected)))
}

fn cmd_aut(file: &Path) -> Result<Outcome> {
    let (q, _) = load_quandle(file)?;
    let a = aut(&q)?;
    let mut j = to_value(&a);
    j["homogeneous"] = json!(a.is_transitive());
    let mut text = format!("order: {}\nhomogeneous: {}\ngenerators: {}\n", a.order, a.is_transitive(), a.generators.len());
    for g in &a.generators {
        let _ = writeln!(text, "  {g}");
    }
    Ok(Outcome::ok(j, text))
}

fn cmd_iso(first: &Path, second: &Path) -> Result<Outcome> {
    let (a, _) = load_quandle(first)?;
    let (b, _) = load_quandle(second)?;
    let f = iso_search(&a, &b)?;
    let text = match &f {
        Some(m) => format!("isomorphic: true\nmap: {}\n", join(m)),
        None => "isomorphic: false\n".to_string(),
    };
    Ok(Outcome::ok(json!({ "isomorphic": f.is_some(), "map": f }), text))
}

fn cmd_realize(file: &Path, base: usize, target: Option<usize>, ctx: &Ctx) -> Result<Outcome> {
    let (q, _) = load_quandle(file)?;
    let z = Realizer::new(&q, ctx.cap)?;
    let r = z.realize(base, ctx.seed)?;
    let mut ok = r.checks.all();
    let mut j = r.to_json();
    let mut text = format!(
        "base: {base}\n|G| = |Tr(Q)|: {}\n|H|: {}\norbit size: {}\n",
        r.group.order(),
        r.stabilizer.len(),
        r.orbit.len()
    );
    for (name, v) in [
        ("phi is an automorphism", r.checks.phi_is_automorphism),
        ("H inside G^phi", r.checks.stabilizer_fixed_by_phi),
        ("H commutes with s_q", r.checks.stabilizer_commutes_with_symmetry),
        ("coset operation well defined", r.checks.coset_operation_well_defined),
        ("pi bijective", r.checks.pi_bijective),
        ("pi homomorphism", r.checks.pi_homomorphism),
        ("pi inverse homomorphism", r.checks.pi_inverse_homomorphism),
    ] {
        let _ = writeln!(text, "{name}: {v}");
    }
    if let Some(t) = target {
        let rep = z.inter_orbit(base, t, ctx.seed)?;
        ok &= rep.ok();
        let _ = writeln!(
            text,
            "inter-orbit {base} -> {t}: compatible {}, well defined {}",
            rep.compatible, rep.well_defined
        );
        j["inter_orbit"] = to_value(&rep);
    }
    Ok(Outcome {
        json: j,
        text,
        status: if ok { EXIT_OK } else { EXIT_VERIFY },
    })
}

fn cmd_sbar(file: &Path, base: usize, ctx: &Ctx) -> Result<Outcome> {
    let (q, _) = load_quandle(file)?;
    let rep = sbar_hom(&q, base, ctx.cap)?;
    let mut text = format!(
        "|Inn(Q)|: {}\nhomomorphism: {}\ninjective: {}\nfibers: {}\n",
        rep.group_order,
        rep.is_homomorphism,
        rep.injective,
        rep.fibers.len()
    );
    for f in &rep.fibers {
        let _ = writeln!(text, "  {}", join(f));
    }
    let _ = writeln!(text, "fibers are symmetry classes: {}", rep.fibers_match_symmetry_classes);
    let status = if rep.is_homomorphism { EXIT_OK } else { EXIT_VERIFY };
    Ok(Outcome {
        json: to_value(&rep),
        text,
        status,
    })
}

fn cmd_report(file: &Path, ctx: &Ctx) -> Result<Outcome> {
    let (q, _) = load_quandle(file)?;
    let rep = regularity_report(&q, ctx.cap, ctx.seed)?;
    let cons = isolated_connected_consequence(&q);
    let f = rep.flags;
    let phi = f.phi_prime.map_or("unknown".to_string(), |b| b.to_string());
    let mut text = format!(
        "I' (Fix(s_q) = {{q}}): {}\nD' (t_q onto): {}\nC (connected): {}\nPhi' (weak coset realization): {phi}\n",
        f.i_prime, f.d_prime, f.c
    );
    let _ = writeln!(text, "largest |image t_q|: {} of {}", cons.max_image, q.size());
    if cons.anomaly {
        let _ = writeln!(text, "note: I' holds but no right translation is onto");
    }
    let j = json!({ "report": to_value(&rep), "consequence": to_value(&cons) });
    Ok(Outcome::ok(j, text))
}

fn cmd_survey(dir: Option<&Path>, ctx: &Ctx) -> Result<Outcome> {
    let corpus = match dir {
        None => corpus::standard_corpus()?,
        Some(d) => {
            let mut paths: Vec<PathBuf> = std::fs::read_dir(d)?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.extension().is_some_and(|x| x == "json"))
                .collect();
            paths.sort();
            let mut out = Vec::new();
            for p in paths {
                let name = p.file_stem().map_or(String::new(), |s| s.to_string_lossy().into_owned());
                out.push((name, load_quandle(&p)?.0));
            }
            out
        }
    };
    let s = implication_survey(&corpus, ctx.cap, ctx.seed)?;
    let flag = |b: Option<bool>| match b {
        Some(true) => "1",
        Some(false) => "0",
        None => "?",
    };
    let mut text = String::from("instance\tsize\tI'\tD'\tC\tPhi'\n");
    for r in &s.rows {
        let f = r.flags;
        let _ = writeln!(
            text,
            "{}\t{}\t{}\t{}\t{}\t{}",
            r.name,
            r.size,
            flag(Some(f.i_prime)),
            flag(Some(f.d_prime)),
            flag(Some(f.c)),
            flag(f.phi_prime)
        );
    }
    text.push_str("\nimplication\tpremise holds\tcounterexamples\n");
    for i in &s.implications {
        let _ = writeln!(
            text,
            "{} => {}\t{}\t{}",
            i.premise.join(" & "),
            i.conclusion,
            i.premise_count,
            i.counterexamples.len()
        );
    }
    Ok(Outcome::ok(to_value(&s), text))
}

fn cmd_color(args: ColorArgs) -> Result<Outcome> {
    let diagram: KnotDiagram = match (&args.diagram, &args.braid) {
        (Some(path), None) => parse_pd(&read_text(path)?)?,
        (None, Some(word)) => parse_braid(word, args.strands)?,
        _ => return Err(Error::Shape("give exactly one of --diagram and --braid".into())),
    };
    let (q, _) = load_quandle(&args.quandle)?;
    let c = count_colorings(&diagram, &q, args.by_orbit);
    let mut text = format!("colorings: {}\n", c.total);
    if let Some(b) = &c.by_orbit {
        let dec = orbits(&q);
        for (i, n) in b.iter().enumerate() {
            let _ = writeln!(text, "  orbit {i} (base {}): {n}", dec.bases[i]);
        }
    }
    let mut j = to_value(&c);
    j["crossings"] = json!(diagram.crossings.len());
    j["components"] = json!(diagram.component_count());
    Ok(Outcome::ok(j, text))
}

fn cmd_action(file: &Path, ctx: &Ctx) -> Result<Outcome> {
    let a = ActionFile::parse(&read_text(file)?)?;
    let cmp = a.compare_orbits();
    let op = a.op_group(ctx.cap)?.order();
    let trg = a.tr_action_group(ctx.cap)?.order();
    let mut text = format!("|Op(Q,X)|: {op}\n|Tr(Q,X)|: {trg}\n");
    for c in &cmp {
        let _ = writeln!(
            text,
            "point {}: op orbit {} point(s), tr orbit {} point(s){}",
            c.point,
            c.op_orbit.len(),
            c.tr_orbit.len(),
            if c.equal { "" } else { ", differ" }
        );
    }
    let j = json!({ "op_order": op, "tr_order": trg, "points": to_value(&cmp) });
    Ok(Outcome::ok(j, text))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("quandle").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(run_args(&["frobnicate"]).0, EXIT_INPUT);
        assert_eq!(run_args(&["make", "dihedral"]).0, EXIT_INPUT);
        let (code, out, _) = run_args(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("Usage"));
    }

    #[test]
    fn alexander_parameter_forms() {
        assert_eq!(parse_alexander_param("3").unwrap(), AlexanderParam::Scalar(3));
        assert_eq!(
            parse_alexander_param("1,2;0,1").unwrap(),
            AlexanderParam::Matrix(vec![vec![1, 2], vec![0, 1]])
        );
        assert!(parse_alexander_param("1,x").is_err());
    }

    #[test]
    fn group_specs() {
        assert_eq!(parse_group("cyclic:8").unwrap().order(), 8);
        assert_eq!(parse_group("symmetric:3").unwrap().order(), 6);
        assert_eq!(parse_group("sl2:3").unwrap().order(), 24);
        assert!(parse_group("cyclic:x").is_err());
    }
}
