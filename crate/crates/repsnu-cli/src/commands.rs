use std::collections::BTreeMap;

use clap::{Args, Subcommand};
use serde_json::{json, Value};

use repsnu::arith::{format_rational, NuPolynomial, Rational};
use repsnu::category_o::{self, k_lambda, module_char, verma_char, OKind, OModuleLabel};
use repsnu::character::GlUCharacter;
use repsnu::deligne::{self, abelian_object_data, hom_dim_indec, place, AbelianKind, AbelianObjectLabel};
use repsnu::diagram::{BarDiagram, DeltaMorphism, Diagram, HMorphism};
use repsnu::schur_weyl::{duality_check, sw_image, sw_kernel};
use repsnu::specialize::{specialize_diagram, InjectionBasis};
use repsnu::tensor::{self, Report};
use repsnu::verify::{run_suite, Limits, Suite};
use repsnu::young::{same_mu_multiset, tilde, NuClass, YoungDiagram};

use crate::literals::{parse_flag, usage, CliError, Nu, ObjectSpec};
use crate::Output;

pub const GUARD_ARITY: usize = 8;
pub const GUARD_K: usize = 6;
pub const GUARD_N: usize = 12;

fn guard(unsafe_limits: bool, what: &str, value: usize, limit: usize) -> Result<(), CliError> {
    if !unsafe_limits && value > limit {
        return Err(CliError::Usage(format!(
            "{what} = {value} exceeds the default limit {limit}; pass --unsafe-limits to go further"
        )));
    }
    Ok(())
}

fn char_json(c: &GlUCharacter) -> Value {
    Value::Array(c.mults().iter().map(|(mu, m)| json!([mu.to_string(), m])).collect())
}

fn char_text(c: &GlUCharacter) -> String {
    if c.is_zero() {
        return "0".into();
    }
    c.mults()
        .iter()
        .map(|(mu, m)| if *m == 1 { format!("S({mu})") } else { format!("{m}*S({mu})") })
        .collect::<Vec<_>>()
        .join(" + ")
}

#[derive(Args, Debug)]
pub struct ComposeArgs {
    /// Applied first.
    #[arg(long)]
    pub pi: String,
    /// Applied second.
    #[arg(long)]
    pub rho: String,
    /// `delta` for the Δ_k calculus (bar diagrams), `h` for h^{⊗k}.
    #[arg(long, default_value = "delta")]
    pub model: String,
}

pub fn compose(a: &ComposeArgs, unsafe_limits: bool) -> Result<Output, CliError> {
    let pi: Diagram = parse_flag("pi", &a.pi)?;
    let rho: Diagram = parse_flag("rho", &a.rho)?;
    for d in [&pi, &rho] {
        guard(unsafe_limits, "arity", d.top_arity().max(d.bottom_arity()), GUARD_ARITY)?;
    }
    if pi.bottom_arity() != rho.top_arity() {
        return Err(CliError::Usage(format!(
            "--rho: pi has {} bottom vertices but rho has {} top vertices",
            pi.bottom_arity(),
            rho.top_arity()
        )));
    }
    let terms: Vec<(Diagram, NuPolynomial)> = match a.model.as_str() {
        "delta" => {
            let p = BarDiagram::try_from(pi).map_err(|e| usage("pi", e))?;
            let r = BarDiagram::try_from(rho).map_err(|e| usage("rho", e))?;
            let out = DeltaMorphism::from_diagram(p)
                .compose_delta(&DeltaMorphism::from_diagram(r))
                .map_err(|e| CliError::Usage(e.to_string()))?;
            out.terms().iter().map(|(d, c)| (Diagram::from(d.clone()), c.clone())).collect()
        }
        "h" => {
            let out = HMorphism::from_diagram(pi)
                .compose_h(&HMorphism::from_diagram(rho))
                .map_err(|e| CliError::Usage(e.to_string()))?;
            out.terms().iter().map(|(d, c)| (d.clone(), c.clone())).collect()
        }
        other => return Err(usage("model", format!("'{other}' is neither 'delta' nor 'h'"))),
    };
    // Fewer merged blocks first, so the glued diagram leads.
    let mut terms = terms;
    terms.sort_by(|(d1, _), (d2, _)| d2.num_blocks().cmp(&d1.num_blocks()).then_with(|| d1.cmp(d2)));
    let sum: Vec<String> = terms
        .iter()
        .enumerate()
        .map(|(i, (_, c))| {
            let f = c.factored_with("");
            let f = if f.contains('+') || (f.starts_with('-') && f.len() > 1) { format!("({f})") } else { f };
            format!("{f}*t{}", i + 1)
        })
        .collect();
    let mut text = if sum.is_empty() { "0".to_string() } else { sum.join(" + ") };
    for (i, (d, _)) in terms.iter().enumerate() {
        text.push_str(&format!("\nt{} = {d}", i + 1));
    }
    let json = json!({
        "terms": terms.iter().enumerate().map(|(i, (d, c))| json!({
            "name": format!("t{}", i + 1),
            "coefficient": c.factored_with(""),
            "expanded": c.to_string(),
            "diagram": d.to_string(),
        })).collect::<Vec<_>>()
    });
    Ok(Output::ok(text, json))
}

#[derive(Args, Debug)]
pub struct SpecializeArgs {
    #[arg(long)]
    pub pi: String,
    #[arg(long)]
    pub n: usize,
}

pub fn specialize(a: &SpecializeArgs, unsafe_limits: bool) -> Result<Output, CliError> {
    let pi: BarDiagram = parse_flag("pi", &a.pi)?;
    guard(unsafe_limits, "arity", pi.top_arity().max(pi.bottom_arity()), GUARD_ARITY)?;
    guard(unsafe_limits, "n", a.n, GUARD_N)?;
    let m = specialize_diagram(&pi, a.n).map_err(|e| usage("n", e))?;
    let rows = InjectionBasis::new(pi.bottom_arity(), a.n).map_err(|e| usage("n", e))?;
    let cols = InjectionBasis::new(pi.top_arity(), a.n).map_err(|e| usage("n", e))?;
    let show = |f: &[usize]| format!("({})", f.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(","));
    let mut text = format!("{} x {} matrix on Inj at n = {}", m.rows(), m.cols(), a.n);
    let mut by_col: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(r, c) in m.entries().keys() {
        by_col.entry(c).or_default().push(r);
    }
    for (c, rs) in &by_col {
        let images: Vec<String> = rs.iter().map(|&r| show(&rows.elements()[r])).collect();
        text.push_str(&format!("\n{} -> {}", show(&cols.elements()[*c]), images.join(" + ")));
    }
    let json = json!({
        "n": a.n,
        "rows": m.rows(),
        "cols": m.cols(),
        "trace": format_rational(&m.trace()),
        "entries": m.entries().keys().map(|(r, c)| json!([r, c])).collect::<Vec<_>>(),
    });
    Ok(Output::ok(text, json))
}

#[derive(Args, Debug)]
pub struct ClassArgs {
    #[arg(long)]
    pub lambda: String,
    #[arg(long)]
    pub nu: String,
    /// Last class position to list.
    #[arg(long, default_value_t = 3)]
    pub upto: usize,
}

fn class_of(a: &ClassArgs, command: &str) -> Result<(YoungDiagram, Rational, NuClass, usize), CliError> {
    let lambda: YoungDiagram = parse_flag("lambda", &a.lambda)?;
    let nu: Nu = parse_flag("nu", &a.nu)?;
    let q = nu.numeric(command)?;
    let p = place(&lambda, &q);
    Ok((lambda, q, p.class, p.position))
}

pub fn class(a: &ClassArgs) -> Result<Output, CliError> {
    let (lambda, q, class, pos) = class_of(a, "class")?;
    let members = class.members(a.upto);
    let checks: Vec<bool> = members.windows(2).map(|w| same_mu_multiset(&w[0], &w[1], &q)).collect();
    let tilde_base = match &class {
        NuClass::Chain { base, nu } => tilde(base, *nu as i64),
        NuClass::Trivial(_) => None,
    };
    let kind = if class.is_trivial() { "trivial" } else { "chain" };
    let mut text = format!("{lambda} lies in a {kind} class at position {pos}");
    for (i, m) in members.iter().enumerate() {
        text.push_str(&format!("\n  lambda^({i}) = {m}"));
    }
    if !checks.is_empty() {
        let ok = checks.iter().all(|&b| b);
        text.push_str(&format!("\nmu-multisets agree along the chain: {}", if ok { "yes" } else { "NO" }));
    }
    if let Some(t) = &tilde_base {
        text.push_str(&format!("\ntilde(lambda^(0)) = {t}"));
    }
    let json = json!({
        "lambda": lambda.to_string(),
        "nu": format_rational(&q),
        "kind": kind,
        "position": pos,
        "class": members.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
        "mu_checks": checks,
        "tilde": tilde_base.map(|t| t.to_string()),
    });
    let failed = json["mu_checks"].as_array().is_some_and(|v| v.iter().any(|b| b == false));
    Ok(Output { text, json, failed })
}

pub fn homdim(a: &ClassArgs) -> Result<Output, CliError> {
    let (_, q, class, _) = class_of(a, "homdim")?;
    let members = class.members(a.upto);
    let hom: Vec<Vec<u32>> =
        members.iter().map(|x| members.iter().map(|y| hom_dim_indec(x, y, &q)).collect()).collect();
    let names: Vec<String> = members.iter().map(|m| m.to_string()).collect();
    let width = names.iter().map(String::len).max().unwrap_or(1);
    let mut text = format!("{:width$} | {}", "", names.join(" | "));
    for (name, row) in names.iter().zip(&hom) {
        let cells: Vec<String> = row.iter().zip(&names).map(|(h, n)| format!("{h:>w$}", w = n.len())).collect();
        text.push_str(&format!("\n{name:width$} | {}", cells.join(" | ")));
    }
    Ok(Output::ok(text, json!({ "class": names, "hom": hom })))
}

fn mult_json(m: &BTreeMap<usize, u32>) -> Value {
    Value::Array(m.iter().map(|(i, k)| json!([i, k])).collect())
}

pub fn blocks(a: &ClassArgs) -> Result<Output, CliError> {
    let nu: Nu = parse_flag("nu", &a.nu)?;
    nu.integer("blocks")?;
    let (_, q, class, _) = class_of(a, "blocks")?;
    let members = class.members(a.upto);
    let names: Vec<String> = members.iter().map(|m| m.to_string()).collect();
    let hom: Vec<Vec<u32>> =
        members.iter().map(|x| members.iter().map(|y| hom_dim_indec(x, y, &q)).collect()).collect();
    let mut objects = Vec::new();
    let mut text = format!("class: {}", names.join(" < "));
    let top = if class.is_trivial() { 0 } else { a.upto };
    for kind in [AbelianKind::Simple, AbelianKind::Standard, AbelianKind::Costandard, AbelianKind::Projective] {
        for i in 0..=top {
            let label = AbelianObjectLabel::new(kind, class.clone(), i);
            let data = abelian_object_data(&label);
            let layers: Vec<String> = data
                .socle_layers
                .iter()
                .map(|l| l.iter().map(|j| format!("L{j}")).collect::<Vec<_>>().join(","))
                .collect();
            text.push_str(&format!("\n{label}: socle layers [{}]", layers.join("; ")));
            objects.push(json!({
                "label": label.to_string(),
                "composition_factors": mult_json(&data.composition_factors),
                "standard_filtration": data.standard_filtration.as_ref().map(mult_json),
                "socle_layers": data.socle_layers,
            }));
        }
    }
    Ok(Output::ok(text, json!({ "class": names, "hom": hom, "objects": objects })))
}

#[derive(Args, Debug)]
pub struct ModuleArgs {
    #[arg(long)]
    pub lambda: String,
    #[arg(long, default_value = "T")]
    pub nu: String,
    /// dim V.
    #[arg(long = "N")]
    pub dim_v: usize,
    #[arg(long, default_value_t = 8)]
    pub cutoff: usize,
}

pub fn verma(a: &ModuleArgs) -> Result<Output, CliError> {
    let lambda: YoungDiagram = parse_flag("lambda", &a.lambda)?;
    let _: Nu = parse_flag("nu", &a.nu)?;
    if a.dim_v == 0 {
        return Err(usage("N", "dim V must be at least 1"));
    }
    let c = verma_char(&lambda, a.dim_v, a.cutoff);
    let label = format!("M({lambda})");
    let text = format!("ch {label} = {} (|mu| <= {})", char_text(&c), a.cutoff);
    Ok(Output::ok(text, json!({ "label": label, "char": char_json(&c), "cutoff": a.cutoff })))
}

#[derive(Args, Debug)]
pub struct ObjectArgs {
    /// `KIND:index`: L, M, M*, P on the envelope side; L, M, Mv, P, I in O.
    #[arg(long)]
    pub object: String,
    /// Any member of the class.
    #[arg(long)]
    pub lambda: String,
    #[arg(long)]
    pub nu: String,
    #[arg(long = "N")]
    pub dim_v: usize,
    #[arg(long, default_value_t = 8)]
    pub cutoff: usize,
}

fn object_class(a: &ObjectArgs, command: &str) -> Result<(ObjectSpec, Rational, NuClass), CliError> {
    let spec: ObjectSpec = parse_flag("object", &a.object)?;
    let lambda: YoungDiagram = parse_flag("lambda", &a.lambda)?;
    let nu: Nu = parse_flag("nu", &a.nu)?;
    let q = nu.numeric(command)?;
    if a.dim_v == 0 {
        return Err(usage("N", "dim V must be at least 1"));
    }
    let class = place(&lambda, &q).class;
    if class.is_trivial() && spec.index > 0 {
        return Err(usage("object", format!("the class of {lambda} at v = {} has a single member", format_rational(&q))));
    }
    Ok((spec, q, class))
}

pub fn char(a: &ObjectArgs) -> Result<Output, CliError> {
    let (spec, _, class) = object_class(a, "char")?;
    let kind = match spec.kind.as_str() {
        "L" => OKind::Simple,
        "M" => OKind::Verma,
        "Mv" | "M∨" => OKind::DualVerma,
        "P" => OKind::Projective,
        "I" => OKind::InjectiveHull,
        other => return Err(usage("object", format!("unknown module kind '{other}'"))),
    };
    let label = OModuleLabel::new(kind, class, spec.index, a.dim_v);
    let c = module_char(&label, a.cutoff).map_err(|e| CliError::Failed(e.to_string()))?;
    let text = format!("ch {label} = {} (|mu| <= {})", char_text(&c), a.cutoff);
    Ok(Output::ok(text, json!({ "label": label.to_string(), "char": char_json(&c), "cutoff": a.cutoff })))
}

#[derive(Args, Debug)]
pub struct BggArgs {
    #[arg(long)]
    pub lambda: String,
    #[arg(long)]
    pub nu: String,
    #[arg(long = "N")]
    pub dim_v: usize,
    #[arg(long, default_value_t = 6)]
    pub max_pos: usize,
}

pub fn bgg(a: &BggArgs) -> Result<Output, CliError> {
    let lambda: YoungDiagram = parse_flag("lambda", &a.lambda)?;
    let nu: Nu = parse_flag("nu", &a.nu)?;
    let n = nu.integer("bgg")?;
    let class = place(&lambda, &Rational::from_integer(n.into())).class;
    let envelope = deligne::bgg_reciprocity_check(&class, a.max_pos);
    let o_side = category_o::bgg_reciprocity_check(&class, a.dim_v, a.max_pos);
    let k = k_lambda(&class, a.dim_v);
    let top = if class.is_trivial() { 0 } else { a.max_pos };
    let table: Vec<Vec<u32>> = (0..=top)
        .map(|j| (0..=top).map(|i| category_o::projective_verma_mult(&class, j, i, a.dim_v)).collect())
        .collect();
    let verdict = |b: bool| if b { "OK" } else { "FAILED" };
    let text = format!(
        "{class}, N = {}, k_lambda = {k}\nenvelope (P : M) = [M : L]: {}\ncategory O (P : M) = [M : L]: {}",
        a.dim_v,
        verdict(envelope),
        verdict(o_side)
    );
    let json = json!({
        "class": class.to_string(),
        "k_lambda": k,
        "envelope": envelope,
        "category_o": o_side,
        "projective_verma": table,
    });
    Ok(Output { text, json, failed: !(envelope && o_side) })
}

pub fn sw(a: &ObjectArgs) -> Result<Output, CliError> {
    let (spec, q, class) = object_class(a, "sw")?;
    let kind = match spec.kind.as_str() {
        "L" => AbelianKind::Simple,
        "M" => AbelianKind::Standard,
        "M*" => AbelianKind::Costandard,
        "P" => AbelianKind::Projective,
        other => return Err(usage("object", format!("unknown envelope object kind '{other}'"))),
    };
    let x = AbelianObjectLabel::new(kind, class, spec.index);
    let image = sw_image(&x, &q, a.dim_v, a.cutoff);
    let duality = duality_check(&x, a.dim_v);
    let kernel = (kind == AbelianKind::Simple).then(|| sw_kernel(&x, a.dim_v));
    let (label, c, agree, detail) = match image {
        Ok(img) => (img.label.to_string(), Some(img.char), true, None),
        Err(e) => ("?".to_string(), None, false, Some(e.to_string())),
    };
    let mut text = format!("SW({x}) = {label}");
    if let Some(c) = &c {
        text.push_str(&format!("\nch = {} (|mu| <= {})", char_text(c), a.cutoff));
    }
    text.push_str(&format!("\ncharacters agree: {agree}\nduality commutes: {duality}"));
    if let Some(k) = kernel {
        text.push_str(&format!("\nin the kernel after localization: {k}"));
    }
    if let Some(d) = &detail {
        text.push_str(&format!("\n{d}"));
    }
    let json = json!({
        "object": x.to_string(),
        "image_label": label,
        "char": c.as_ref().map(char_json).unwrap_or(Value::Null),
        "cutoff": a.cutoff,
        "checks": { "characters_agree": agree, "duality": duality, "in_kernel": kernel },
    });
    Ok(Output { text, json, failed: !(agree && duality) })
}

#[derive(Args, Debug)]
pub struct DimArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub d: usize,
}

pub fn dim(a: &DimArgs, unsafe_limits: bool) -> Result<Output, CliError> {
    guard(unsafe_limits, "k", a.k, GUARD_K)?;
    if a.d == 0 {
        return Err(usage("d", "dim U must be at least 1"));
    }
    let p = tensor::graded_dimension(a.k, a.d).map_err(|e| usage("k", e))?;
    let text = p.factored();
    Ok(Output::ok(text.clone(), json!({ "k": a.k, "d": a.d, "dimension": text, "expanded": p.to_string() })))
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// One of oracle, generators, commutators, specialize, dimension, bgg,
    /// sw, classical, multiplicity, injectivity, or all.
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long, default_value_t = 3)]
    pub max_arity: usize,
    /// Restrict the commutator suite to one grade.
    #[arg(long)]
    pub k: Option<usize>,
    /// Restrict the commutator suite to one dim U.
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long, default_value_t = 2024)]
    pub seed: u64,
}

fn report_lines(report: &Report) -> (Vec<String>, bool) {
    let summary = report.summary();
    let lines = summary
        .iter()
        .map(|c| match &c.detail {
            None => format!("{}: OK", c.name),
            Some(d) => format!("{}: FAILED at {d}", c.name),
        })
        .collect();
    (lines, summary.iter().all(|c| c.ok))
}

fn commutator_report(k: usize, d: usize, unsafe_limits: bool) -> Result<Report, CliError> {
    if unsafe_limits {
        tensor::verify_commutators_unchecked(k, d)
    } else {
        tensor::verify_commutators(k, d)
    }
    .map_err(|e| CliError::Usage(format!("{e}; pass --unsafe-limits to go further")))
}

pub fn verify(a: &VerifyArgs, unsafe_limits: bool) -> Result<Output, CliError> {
    guard(unsafe_limits, "max-arity", a.max_arity, GUARD_ARITY)?;
    if a.suite == "commutators" && (a.k.is_some() || a.d.is_some()) {
        let k = a.k.unwrap_or(2);
        let d = a.d.unwrap_or(1);
        let report = commutator_report(k, d, unsafe_limits)?;
        let (lines, ok) = report_lines(&report);
        let n = lines.len();
        let text = if ok { format!("OK ({n} identities)") } else { lines.join("\n") };
        let json = json!({
            "suites": [{ "suite": "commutators", "ok": ok, "cases": report.checks.len(), "failure": (!ok).then(|| lines.join("; ")) }],
        });
        return Ok(Output { text, json, failed: !ok });
    }
    let suites: Vec<Suite> = if a.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![parse_flag::<Suite>("suite", &a.suite)?]
    };
    let limits = Limits { max_arity: a.max_arity, seed: a.seed, ..Limits::default() };
    let results: Vec<_> = suites.iter().map(|&s| run_suite(s, &limits)).collect();
    let text = results.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n");
    let failed = results.iter().any(|r| !r.ok());
    let json = json!({
        "suites": results.iter().map(|r| json!({
            "suite": r.suite, "ok": r.ok(), "cases": r.cases, "failure": r.failure,
        })).collect::<Vec<_>>(),
    });
    Ok(Output { text, json, failed })
}

#[derive(Subcommand, Debug)]
pub enum TensorCommand {
    /// The commutator identities on grade k.
    Verify {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
    },
    /// Compare with the honest tensor power V^{⊗n}.
    Specialize {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        d: usize,
        /// Highest grade kept; defaults to n.
        #[arg(long)]
        k_max: Option<usize>,
    },
}

pub fn tensor(cmd: &TensorCommand, unsafe_limits: bool) -> Result<Output, CliError> {
    let report = match cmd {
        TensorCommand::Verify { k, d } => {
            guard(unsafe_limits, "k", *k, GUARD_K)?;
            commutator_report(*k, *d, unsafe_limits)?
        }
        TensorCommand::Specialize { n, d, k_max } => {
            guard(unsafe_limits, "n", *n, GUARD_N)?;
            let k_max = k_max.unwrap_or(*n);
            if unsafe_limits {
                tensor::specialize_and_compare_unchecked(k_max, *d, *n)
            } else {
                tensor::specialize_and_compare(k_max, *d, *n)
            }
            .map_err(|e| CliError::Usage(format!("{e}; pass --unsafe-limits to go further")))?
        }
    };
    let lines: Vec<String> = report
        .checks
        .iter()
        .map(|c| match &c.detail {
            _ if c.ok => format!("{}: OK", c.name),
            Some(d) => format!("{}: FAILED at {d}", c.name),
            None => format!("{}: FAILED", c.name),
        })
        .collect();
    let json = json!({
        "ok": report.ok(),
        "checks": report.checks.iter().map(|c| json!({
            "name": c.name, "ok": c.ok, "detail": if c.ok { None } else { c.detail.clone() },
        })).collect::<Vec<_>>(),
    });
    Ok(Output { text: lines.join("\n"), json, failed: !report.ok() })
}
