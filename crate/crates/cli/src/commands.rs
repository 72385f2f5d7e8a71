use std::fs;
use std::io::Write as _;

use gbg_core::complex::build_uc;
use gbg_core::gog::criteria::{free_product_criterion_1, free_product_criterion_2, splitting_witness};
use gbg_core::gog::{decompose as run_decompose, GogError, Resolver, StrategyRegistry};
use gbg_core::graph::{check_subdivision, sufficient_subdivision, z2_witness};
use gbg_core::homology::{big_to_json, boundary_matrices, check_boundary_squared, homology as run_homology};
use gbg_core::hyperplanes::check_special;
use gbg_core::presentation::{pi1_presentation, tietze_simplify};
use gbg_core::{FiniteGraph, SCHEMA_VERSION};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::{CheckArgs, CliResult, DecomposeArgs, Format, HomologyArgs, Input, OutputArgs, PresentationArgs, UcArgs};

pub struct Report {
    json: Value,
    text: String,
    dot: Option<String>,
    /// Raised after the report is written.
    failure: Option<CliError>,
}

impl Report {
    fn new(command: &str, mut body: Value, text: String) -> Self {
        let obj = body.as_object_mut().expect("report bodies are objects");
        obj.insert("schema_version".into(), json!(SCHEMA_VERSION));
        obj.insert("command".into(), json!(command));
        Self { json: body, text, dot: None, failure: None }
    }

    pub fn emit(self, out: &OutputArgs) -> CliResult<()> {
        let content = match out.format {
            Format::Json => serde_json::to_string_pretty(&self.json).expect("json values serialize") + "\n",
            Format::Text => self.text,
            Format::Dot => self.dot.ok_or_else(|| CliError::Usage("this command has no DOT output".into()))?,
        };
        match &out.out {
            Some(path) => fs::write(path, content).map_err(|source| CliError::Write { path: path.clone(), source })?,
            None => {
                let _ = std::io::stdout().write_all(content.as_bytes());
            }
        }
        match self.failure {
            Some(e) => Err(e),
            None => Ok(()),
        }
    }
}

fn load(input: &Input) -> CliResult<FiniteGraph> {
    let text =
        fs::read_to_string(&input.graph).map_err(|source| CliError::Read { path: input.graph.clone(), source })?;
    let g = FiniteGraph::parse_json(&text)?;
    Ok(if input.subdivide { sufficient_subdivision(&g, input.n as usize) } else { g })
}

fn graph_json(g: &FiniteGraph) -> Value {
    serde_json::from_str(&g.to_json()).expect("graph json round trips")
}

fn registry(names: &Option<Vec<String>>) -> CliResult<StrategyRegistry> {
    Ok(match names {
        Some(names) => StrategyRegistry::from_names(names)?,
        None => StrategyRegistry::with_defaults(),
    })
}

pub fn uc(a: &UcArgs) -> CliResult<Report> {
    let g = load(&a.input)?;
    let n = a.input.n as usize;
    let cc = build_uc(&g, n, a.max_dim)?;
    let comps = cc.components()?;
    let euler = cc.euler_characteristic().ok();
    let components: Vec<Value> =
        comps.iter().map(|c| json!({ "signature": c.signature, "configurations": c.vertices.len() })).collect();
    let mut text = format!("UC_{n}: cube counts {:?}, {} component(s)\n", cc.counts(), comps.len());
    if let Some(e) = euler {
        text += &format!("euler characteristic {e}\n");
    }
    for c in &comps {
        text += &format!("  {:?}: {} configurations\n", c.signature, c.vertices.len());
    }
    let mut report = Report::new(
        "uc",
        json!({
            "graph": graph_json(&g),
            "n": n,
            "complete": cc.is_complete(),
            "counts": cc.counts(),
            "euler": euler,
            "component_count": comps.len(),
            "components": components,
        }),
        text,
    );
    report.dot = Some(cc.to_dot());
    Ok(report)
}

fn parse_cut(g: &FiniteGraph, items: &[String]) -> CliResult<Vec<usize>> {
    items
        .iter()
        .map(|item| {
            let (a, b) =
                item.split_once(':').ok_or_else(|| CliError::Usage(format!("cut edge {item:?} must look like u:v")))?;
            Ok(g.find_edge(a.trim(), b.trim())?)
        })
        .collect()
}

pub fn decompose(a: &DecomposeArgs) -> CliResult<Report> {
    let g = load(&a.input)?;
    let cut = parse_cut(&g, &a.cut)?;
    let reg = registry(&a.resolvers)?;
    let gog = run_decompose(&g, a.input.n as usize, &cut, &Resolver::new(&reg))?;
    if !gog.shape_agrees() {
        return Err(CliError::Invariant("link counts disagree with the prediction".into()));
    }
    let mut body = gog.to_json();
    body["strategies"] = json!(reg.names());
    let mut report = Report::new("decompose", body, gog.to_text());
    report.dot = Some(gog.to_dot());
    Ok(report)
}

pub fn homology(a: &HomologyArgs) -> CliResult<Report> {
    let g = load(&a.input)?;
    let cc = build_uc(&g, a.input.n as usize, None)?;
    check_boundary_squared(&cc)?;
    if let Some(dir) = &a.dump_matrices {
        fs::create_dir_all(dir).map_err(|source| CliError::Write { path: dir.clone(), source })?;
        for (i, d) in boundary_matrices(&cc).iter().enumerate() {
            let path = dir.join(format!("d{}.txt", i + 1));
            fs::write(&path, d.to_triplets()).map_err(|source| CliError::Write { path, source })?;
        }
    }
    let h = run_homology(&cc)?;
    let components = cc.components()?.len();
    if h.betti(0) != components {
        return Err(CliError::Invariant(format!("b0 = {} but the complex has {components} components", h.betti(0))));
    }
    let mut body = h.to_json();
    body["n"] = json!(a.input.n);
    body["counts"] = json!(cc.counts());
    let torsion: Vec<String> = h
        .torsion
        .iter()
        .enumerate()
        .filter(|(_, t)| !t.is_empty())
        .map(|(k, t)| format!("H_{k} torsion {:?}", t.iter().map(|x| x.to_string()).collect::<Vec<_>>()))
        .collect();
    let text = format!(
        "betti {:?}, euler {}{}\n",
        h.betti,
        h.euler,
        if torsion.is_empty() { ", torsion-free".to_string() } else { format!(", {}", torsion.join("; ")) }
    );
    Ok(Report::new("homology", body, text))
}

pub fn check(a: &CheckArgs) -> CliResult<Report> {
    let g = load(&a.input)?;
    let n = a.input.n as usize;
    let subdivision = check_subdivision(&g, n);
    let cc = build_uc(&g, n, Some(2))?;
    let special = check_special(&cc)?;
    let c1 = free_product_criterion_1(&g, n);
    let c2 = match free_product_criterion_2(&g, n) {
        Ok(c) => json!(c),
        Err(GogError::NotSubdivided(_)) => {
            json!({ "not_applicable": "graph does not satisfy the subdivision conditions" })
        }
        Err(e) => return Err(e.into()),
    };
    let found = c1.is_some() || c2.get("edge").is_some();
    let summary =
        if found { "free-product certificate found" } else { "no free-product certificate found" }.to_string();

    let mut witness = Value::Null;
    if a.witness && found {
        let mut hints: Vec<&str> = Vec::new();
        if let Some(c) = &c1 {
            hints.push(&c.vertex);
        }
        if let Some(edge) = c2.get("edge").and_then(Value::as_array) {
            hints.extend(edge.iter().filter_map(Value::as_str));
        }
        let reg = registry(&a.resolvers)?;
        witness = match splitting_witness(&g, n, &hints, &Resolver::new(&reg))? {
            Some(w) => json!({
                "cut_edge": w.graph.edge_label(w.decomposition.cut_edges[0]),
                "vertices": w.graph.vertex_count(),
                "splitting": w.splitting,
                "assembled": w.decomposition.assemble().ok().map(|d| d.to_string()),
            }),
            None => json!({ "not_found": "no single-edge cut exhibits the splitting" }),
        };
    }

    let mut text = format!(
        "specialness: {}\nsubdivision conditions: {}\n{summary}\n",
        if special.passes() { "pass" } else { "FAIL" },
        if subdivision.ok { "satisfied" } else { "violated" }
    );
    if let Some(c) = &c1 {
        text += &format!("criterion 1 at vertex {} ({:?})\n", c.vertex, c.role);
    }
    if let Some(edge) = c2.get("edge") {
        text += &format!("criterion 2 at edge {edge}\n");
    }
    if let Some(s) = witness.get("splitting") {
        text += &format!("witness: cut {} gives {}\n", witness["cut_edge"], s["conclusion"]);
    }
    let mut report = Report::new(
        "check",
        json!({
            "n": n,
            "specialness": special,
            "special": special.passes(),
            "subdivision": subdivision,
            "criterion_1": c1,
            "criterion_2": c2,
            "z2_witness": z2_witness(&g, n),
            "summary": summary,
            "witness": witness,
        }),
        text,
    );
    if !special.passes() {
        report.failure = Some(CliError::Invariant("configuration space is not special".into()));
    }
    Ok(report)
}

pub fn presentation(a: &PresentationArgs) -> CliResult<Report> {
    let g = load(&a.input)?;
    let cc = build_uc(&g, a.input.n as usize, Some(2))?;
    let raw = pi1_presentation(&cc, None)?;
    let p = if a.raw { raw.clone() } else { tietze_simplify(&raw) };
    let ab = p.abelianization();
    if ab != raw.abelianization() {
        return Err(CliError::Invariant("simplification changed the abelianization".into()));
    }
    let status = match p.free_rank() {
        Some(r) => format!("free of rank {r}"),
        None => "undetermined presentation".to_string(),
    };
    let body = json!({
        "n": a.input.n,
        "presentation": p.to_serial(),
        "display": p.to_string(),
        "generators_before": raw.generators.len(),
        "relators_before": raw.relators.len(),
        "abelianization": { "free_rank": ab.free_rank, "torsion": ab.torsion.iter().map(big_to_json).collect::<Vec<_>>() },
        "status": status,
    });
    let text = format!("{p}\n{status}\n");
    Ok(Report::new("presentation", body, text))
}

pub fn strategies() -> CliResult<Report> {
    let list = StrategyRegistry::available();
    let text: String = list.iter().map(|(n, s)| format!("{n}: {s}\n")).collect();
    let body = json!({
        "strategies": list.iter().map(|(n, s)| json!({ "name": n, "summary": s })).collect::<Vec<_>>(),
    });
    Ok(Report::new("strategies", body, text))
}
