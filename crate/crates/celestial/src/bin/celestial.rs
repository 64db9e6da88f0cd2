//! Command-line front end: table regeneration, surface verification,
//! Möbius-map application, and lattice queries. All output is deterministic;
//! exit code 0 means every requested check passed, 1 means a verification or
//! table mismatch, 2 a usage error.

use std::process::ExitCode;

use celestial::catalog::{load_user_surface, lookup, names, SurfaceRecord};
use celestial::classifier::{
    admissible_types, diff_m4_classes, diff_m4_counts, diff_table_c1, diff_table_g, diff_types,
    reproduce_m4_tables, reproduce_table_c1, reproduce_table_g, survey_types, verify_conical_rows,
    verify_surface, SurfaceReport, TypeReason,
};
use celestial::lattice::{
    canonical_configuration, dynkin_type, enumerate_classes, one_set, real_structure,
    real_two_set, short_name, two_set, DivisorClass, LatticeSpec, RootConfiguration,
};
use celestial::moebius::{moebius_map, moebius_model, surface_type, ProjectiveHypersurface};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "celestial", version, about = "Exact toolkit for celestial surfaces")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Regenerate a classification table, optionally diffing it against the
    /// embedded expected values.
    Tables(TablesArgs),
    /// Inspect or verify a catalog surface (or one loaded from a file).
    Surface(SurfaceArgs),
    /// Apply or display a Möbius map given by name (mu0..mu9) or word.
    Map(MapArgs),
    /// Query the Picard lattices B(r) and P(r).
    Lattice(LatticeArgs),
}

#[derive(Args)]
struct TablesArgs {
    /// Which table: c1 | g | m4 | m4-classes | schicho | types.
    which: Option<TableName>,
    /// Alias for the positional table name.
    #[arg(long = "which", value_name = "WHICH")]
    which_flag: Option<TableName>,
    /// Print cell-level discrepancies and exit nonzero on any mismatch.
    #[arg(long)]
    diff: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum TableName {
    C1,
    G,
    M4,
    M4Classes,
    Schicho,
    Types,
}

#[derive(Args)]
struct SurfaceArgs {
    #[command(subcommand)]
    action: SurfaceAction,
}

#[derive(Subcommand)]
enum SurfaceAction {
    /// Recompute every declared property of the surface.
    Verify(SurfaceSel),
    /// Print the Möbius model (sphere + cut equation in a..e).
    Model(SurfaceSel),
    /// Print the record: type, classes, pencils, curves, notes, errata.
    Info(SurfaceSel),
}

#[derive(Args)]
struct SurfaceSel {
    /// Catalog name (see `surface info --list` output of the README).
    name: Option<String>,
    /// Load the record from a file instead of the embedded catalog.
    #[arg(long)]
    file: Option<String>,
    /// Number of rational sample parameters per circle family.
    #[arg(long, default_value_t = 3)]
    samples: usize,
}

#[derive(Args)]
struct MapArgs {
    #[command(subcommand)]
    action: MapAction,
}

#[derive(Subcommand)]
enum MapAction {
    /// Push a surface through the map and print the image equation.
    Apply(MapApplyArgs),
    /// Print the word and the compiled forward/inverse components.
    Show(MapShowArgs),
}

#[derive(Args)]
struct MapApplyArgs {
    /// Map name mu0..mu9 or a word such as "f b0 fi t(1,1,0)".
    #[arg(long)]
    map: String,
    /// Catalog surface name.
    #[arg(long)]
    surface: Option<String>,
    /// Load the surface record from a file.
    #[arg(long)]
    file: Option<String>,
}

#[derive(Args)]
struct MapShowArgs {
    #[arg(long)]
    map: String,
}

#[derive(Args)]
struct LatticeArgs {
    #[command(subcommand)]
    action: LatticeAction,
}

#[derive(Subcommand)]
enum LatticeAction {
    /// Enumerate classes with given self-intersection and anticanonical degree.
    Enumerate(EnumerateArgs),
    /// Canonicalize a root configuration: orbit representative and row index.
    Orbit(ConfigArgs),
    /// The two-set of a configuration (G²=0, G·(-K)=2, G·F ≥ 0), optionally
    /// restricted to the σ-fixed part for a real structure.
    TwoSet(TwoSetArgs),
    /// The one-set of a configuration (E²=−1, E·(-K)=1, E·F ≥ 0).
    OneSet(ConfigArgs),
    /// The Dynkin type of a root configuration.
    Dynkin(ConfigArgs),
}

#[derive(Args)]
struct EnumerateArgs {
    /// Lattice, e.g. B5 or B(5).
    #[arg(long, default_value = "B5")]
    lattice: String,
    /// Required self-intersection C².
    #[arg(long, allow_hyphen_values = true)]
    self_int: i64,
    /// Required degree against the anticanonical class C·(-K).
    #[arg(long, allow_hyphen_values = true)]
    antik: i64,
}

#[derive(Args)]
struct ConfigArgs {
    /// Lattice, e.g. B5 or B(5).
    #[arg(long, default_value = "B5")]
    lattice: String,
    /// Comma-separated short class names, e.g. "12,15,34".
    #[arg(long, default_value = "")]
    classes: String,
}

#[derive(Args)]
struct TwoSetArgs {
    #[command(flatten)]
    config: ConfigArgs,
    /// Restrict to the σ-fixed classes of this real structure (10..15).
    #[arg(long)]
    real: Option<u8>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<bool, String> {
    match &cli.command {
        Command::Tables(args) => run_tables(args, cli.format),
        Command::Surface(args) => match &args.action {
            SurfaceAction::Verify(sel) => run_verify(sel, cli.format),
            SurfaceAction::Model(sel) => run_model(sel, cli.format),
            SurfaceAction::Info(sel) => run_info(sel, cli.format),
        },
        Command::Map(args) => match &args.action {
            MapAction::Apply(a) => run_map_apply(a, cli.format),
            MapAction::Show(a) => run_map_show(a, cli.format),
        },
        Command::Lattice(args) => run_lattice(&args.action, cli.format),
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn emit(format: Format, text: String, value: Value) {
    match format {
        Format::Text => println!("{text}"),
        Format::Json => println!("{}", serde_json::to_string_pretty(&value).expect("json")),
    }
}

// ---------------------------------------------------------------- tables --

fn run_tables(args: &TablesArgs, format: Format) -> Result<bool, String> {
    let which = args
        .which
        .or(args.which_flag)
        .ok_or_else(|| "missing table name: c1 | g | m4 | m4-classes | schicho | types".to_string())?;
    let mut lines: Vec<String> = Vec::new();
    let mut rows_json: Vec<Value> = Vec::new();
    let mut diffs: Vec<String> = Vec::new();
    match which {
        TableName::C1 => {
            let rows = reproduce_table_c1().map_err(err)?;
            for r in &rows {
                lines.push(format!(
                    "{:>2}  {:<28} {:<12} orbit size {}",
                    r.ci,
                    r.names.join(","),
                    r.dynkin,
                    r.orbit_size
                ));
                rows_json.push(json!({
                    "ci": r.ci, "configuration": r.names,
                    "dynkin": r.dynkin, "orbit_size": r.orbit_size,
                }));
            }
            diffs = diff_table_c1(&rows);
        }
        TableName::G => {
            let rows = reproduce_table_g().map_err(err)?;
            lines.push(format!(
                "{:>2}  {:<12} {}",
                "CI",
                "Dynkin",
                (10..=15).map(|ri| format!("{:>6}", format!("RI{ri}"))).collect::<String>()
            ));
            for r in &rows {
                let cells: String = r
                    .cells
                    .iter()
                    .map(|c| {
                        format!(
                            "{:>6}",
                            c.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
                        )
                    })
                    .collect();
                lines.push(format!("{:>2}  {:<12} {}", r.ci, r.dynkin, cells));
                rows_json.push(json!({
                    "ci": r.ci, "dynkin": r.dynkin,
                    "cells": r.cells.to_vec(),
                }));
            }
            diffs = diff_table_g(&rows);
        }
        TableName::M4 => {
            let (rows, _) = reproduce_m4_tables().map_err(err)?;
            lines.push(format!(
                "{:>2} {:>3}  {:<12} {:>3} {:>3} {:>3} {:>3}",
                "CI", "RI", "Dynkin", "#C", "#R", "#F", "#P"
            ));
            for r in &rows {
                lines.push(format!(
                    "{:>2} {:>3}  {:<12} {:>3} {:>3} {:>3} {:>3}",
                    r.ci, r.ri, r.dynkin, r.c, r.r, r.f, r.p
                ));
                rows_json.push(json!({
                    "ci": r.ci, "ri": r.ri, "dynkin": r.dynkin,
                    "complex": r.c, "real": r.r, "families": r.f, "pairs": r.p,
                }));
            }
            diffs = diff_m4_counts(&rows);
        }
        TableName::M4Classes => {
            let (_, rows) = reproduce_m4_tables().map_err(err)?;
            for r in &rows {
                lines.push(format!(
                    "{:>2} {:>3}  {:<12} F={:<22} sF={:<22} G={}",
                    r.ci,
                    r.ri,
                    r.dynkin,
                    r.f_names.join(","),
                    r.sigma_names.join(","),
                    r.g_names.join(",")
                ));
                rows_json.push(json!({
                    "ci": r.ci, "ri": r.ri, "dynkin": r.dynkin,
                    "zero_set": r.f_names, "sigma_zero_set": r.sigma_names,
                    "real_two_set": r.g_names,
                }));
            }
            diffs = diff_m4_classes(&rows);
        }
        TableName::Schicho => {
            let rows = verify_conical_rows().map_err(err)?;
            for r in &rows {
                lines.push(format!(
                    "{}: {:<24} basis {:<6} D={:<12} K2={:<5} D2={:<5} n={:<5} dim {}{}",
                    r.row,
                    r.kind,
                    r.basis,
                    r.hyperplane,
                    r.canonical_self_int,
                    r.hyperplane_self_int,
                    r.embedding_dim,
                    r.family_dim,
                    if r.notes.is_empty() { String::new() } else { format!("  [{}]", r.notes.join("; ")) }
                ));
                rows_json.push(json!({
                    "row": r.row, "kind": r.kind, "basis": r.basis,
                    "hyperplane_class": r.hyperplane,
                    "canonical_self_intersection": r.canonical_self_int,
                    "hyperplane_self_intersection": r.hyperplane_self_int,
                    "embedding_dim": r.embedding_dim, "family_dim": r.family_dim,
                    "notes": r.notes,
                }));
                diffs.extend(r.mismatches.iter().cloned());
            }
        }
        TableName::Types => {
            let rows = survey_types().map_err(err)?;
            for r in &rows {
                let verdict = match &r.reason {
                    TypeReason::Admitted { max_families: Some(m) } => {
                        format!("admitted (≤ {m} complex families)")
                    }
                    TypeReason::Admitted { max_families: None } => {
                        "admitted (unbounded families)".to_string()
                    }
                    TypeReason::LatticeFilter { max_partners } => format!(
                        "excluded: no conic class meets two circle classes twice (best {max_partners})"
                    ),
                    TypeReason::Asserted { note } => {
                        format!("excluded: asserted (cited analytic argument): {note}")
                    }
                };
                lines.push(format!(
                    "({},{})  model degree {}  {}",
                    r.degree, r.cyclicity, r.moebius_degree, verdict
                ));
                rows_json.push(json!({
                    "degree": r.degree, "cyclicity": r.cyclicity,
                    "moebius_degree": r.moebius_degree,
                    "admitted": r.admitted(), "verdict": verdict,
                }));
            }
            diffs = diff_types(&admissible_types().map_err(err)?);
        }
    }
    let passed = diffs.is_empty();
    if args.diff {
        if passed {
            lines.push(format!("diff: all {} rows match", rows_json.len()));
        } else {
            for d in &diffs {
                lines.push(format!("diff: {d}"));
            }
        }
    }
    emit(
        format,
        lines.join("\n"),
        json!({ "rows": rows_json, "diffs": diffs, "matches": passed }),
    );
    Ok(!args.diff || passed)
}

// --------------------------------------------------------------- surface --

fn load_record(sel: &SurfaceSel) -> Result<SurfaceRecord, String> {
    match (&sel.name, &sel.file) {
        (Some(name), None) => lookup(name).map(Clone::clone).map_err(|_| {
            format!("unknown surface `{name}`; embedded records: {}", names().join(", "))
        }),
        (None, Some(path)) => load_user_surface(path).map_err(err),
        _ => Err("give exactly one of <name> or --file <path>".to_string()),
    }
}

fn report_json(report: &SurfaceReport) -> Value {
    json!({
        "name": report.name,
        "type": { "degree": report.surface_type.0, "cyclicity": report.surface_type.1 },
        "passed": report.passed(),
        "checks": report.checks.iter().map(|c| json!({
            "label": c.label, "passed": c.passed, "detail": c.detail,
        })).collect::<Vec<_>>(),
        "notes": report.notes,
        "erratum": report.erratum,
    })
}

fn run_verify(sel: &SurfaceSel, format: Format) -> Result<bool, String> {
    let record = load_record(sel)?;
    let report = verify_surface(&record, sel.samples).map_err(err)?;
    let mut lines = vec![format!(
        "{}: type ({},{})",
        report.name, report.surface_type.0, report.surface_type.1
    )];
    for c in &report.checks {
        let mark = if c.passed { "pass" } else { "FAIL" };
        let detail = if c.detail.is_empty() { String::new() } else { format!(" — {}", c.detail) };
        lines.push(format!("  [{mark}] {}{detail}", c.label));
    }
    for n in &report.notes {
        lines.push(format!("  note: {n}"));
    }
    if let Some(e) = &report.erratum {
        lines.push(format!("  erratum: {e}"));
    }
    lines.push(format!(
        "{}: {}",
        report.name,
        if report.passed() { "all checks passed" } else { "verification FAILED" }
    ));
    emit(format, lines.join("\n"), report_json(&report));
    Ok(report.passed())
}

fn run_model(sel: &SurfaceSel, format: Format) -> Result<bool, String> {
    let record = load_record(sel)?;
    let surface = ProjectiveHypersurface::new(record.equation.clone()).map_err(err)?;
    let model = moebius_model(&surface).map_err(err)?;
    let text = format!(
        "{}\nsphere: {} = 0\ncut:    {} = 0",
        record.name,
        model.sphere(),
        model.cut()
    );
    let value = json!({
        "name": record.name,
        "sphere": model.sphere().to_string(),
        "cut": model.cut().to_string(),
    });
    emit(format, text, value);
    Ok(true)
}

fn run_info(sel: &SurfaceSel, format: Format) -> Result<bool, String> {
    let record = load_record(sel)?;
    let surface = ProjectiveHypersurface::new(record.equation.clone()).map_err(err)?;
    let (d, c) = surface_type(&surface).map_err(err)?;
    let mut lines = vec![
        format!("name:      {}", record.name),
        format!("equation:  {} = 0", record.equation),
        format!("type:      ({d},{c})"),
    ];
    if !record.classes.is_empty() {
        lines.push(format!("classes:   {}", record.classes.join(", ")));
    }
    lines.push(format!("pencils:   {}", record.pencils.len()));
    lines.push(format!("curves:    {}", record.curves.len()));
    lines.push(format!("points:    {}", record.points.len()));
    for img in &record.images {
        lines.push(format!("image:     {} -> {}", img.map, img.target));
    }
    if let Some(p) = &record.pullback {
        lines.push(format!("pullback:  {}({}) = this surface", p.map, p.target));
    }
    for n in &record.notes {
        lines.push(format!("note:      {n}"));
    }
    if let Some(e) = &record.erratum {
        lines.push(format!("erratum:   {e}"));
    }
    let value = json!({
        "name": record.name,
        "equation": record.equation.to_string(),
        "type": { "degree": d, "cyclicity": c },
        "classes": record.classes,
        "pencils": record.pencils.len(),
        "curves": record.curves.len(),
        "points": record.points.len(),
        "images": record.images.iter().map(|i| json!({"map": i.map, "target": i.target})).collect::<Vec<_>>(),
        "pullback": record.pullback.as_ref().map(|p| json!({"map": p.map, "source": p.target})),
        "notes": record.notes,
        "erratum": record.erratum,
    });
    emit(format, lines.join("\n"), value);
    Ok(true)
}

// ------------------------------------------------------------------- map --

fn run_map_apply(args: &MapApplyArgs, format: Format) -> Result<bool, String> {
    let record = load_record(&SurfaceSel {
        name: args.surface.clone(),
        file: args.file.clone(),
        samples: 3,
    })?;
    let spec = moebius_map(&args.map).map_err(err)?;
    let surface = ProjectiveHypersurface::new(record.equation.clone()).map_err(err)?;
    let image = spec.push_surface(&surface).map_err(err)?;
    let (d, c) = surface_type(&image).map_err(err)?;
    let text = format!("{}({}) : {} = 0\ntype ({d},{c})", args.map, record.name, image.poly());
    let value = json!({
        "map": args.map,
        "surface": record.name,
        "image": image.poly().to_string(),
        "type": { "degree": d, "cyclicity": c },
    });
    emit(format, text, value);
    Ok(true)
}

fn run_map_show(args: &MapShowArgs, format: Format) -> Result<bool, String> {
    let spec = moebius_map(&args.map).map_err(err)?;
    let fwd: Vec<String> = spec.forward().components().iter().map(|p| p.to_string()).collect();
    let inv: Vec<String> = spec.inverse().components().iter().map(|p| p.to_string()).collect();
    let text = format!(
        "word:    {}\nforward: ({})\ninverse: ({})",
        spec,
        fwd.join(" : "),
        inv.join(" : ")
    );
    let value = json!({
        "word": spec.to_string(),
        "forward": fwd,
        "inverse": inv,
    });
    emit(format, text, value);
    Ok(true)
}

// --------------------------------------------------------------- lattice --

fn parse_lattice(text: &str) -> Result<LatticeSpec, String> {
    let t = text.trim().to_uppercase().replace(['(', ')'], "");
    let (kind, rank) = t.split_at(1);
    let r: u8 = rank.parse().map_err(|_| format!("bad lattice `{text}` (use B5 or P2)"))?;
    match kind {
        "B" => Ok(LatticeSpec::B(r)),
        "P" => Ok(LatticeSpec::P(r)),
        _ => Err(format!("bad lattice `{text}` (use B5 or P2)")),
    }
}

fn parse_config(args: &ConfigArgs) -> Result<RootConfiguration, String> {
    let lattice = parse_lattice(&args.lattice)?;
    let parts: Vec<&str> =
        args.classes.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    RootConfiguration::from_short_names(lattice, &parts).map_err(err)
}

fn class_strings(classes: &[DivisorClass]) -> (Vec<String>, Vec<Value>) {
    let mut text = Vec::new();
    let mut values = Vec::new();
    for c in classes {
        let named = match short_name(c) {
            Some(n) => format!("{c}  [{n}]"),
            None => c.to_string(),
        };
        text.push(named);
        values.push(json!({
            "class": c.to_string(),
            "short_name": short_name(c),
            "coordinates": c.coordinate_string(),
        }));
    }
    (text, values)
}

fn run_lattice(action: &LatticeAction, format: Format) -> Result<bool, String> {
    match action {
        LatticeAction::Enumerate(args) => {
            let lattice = parse_lattice(&args.lattice)?;
            let classes = enumerate_classes(lattice, args.self_int, args.antik).map_err(err)?;
            let (text, values) = class_strings(&classes);
            emit(
                format,
                format!(
                    "{} classes in {lattice} with C²={} and C·(-K)={}\n{}",
                    classes.len(),
                    args.self_int,
                    args.antik,
                    text.join("\n")
                ),
                json!({ "lattice": lattice.to_string(), "count": classes.len(), "classes": values }),
            );
        }
        LatticeAction::Orbit(args) => {
            let config = parse_config(args)?;
            let (rep, ci) = canonical_configuration(&config).map_err(err)?;
            let dynkin = dynkin_type(&config).map_err(err)?;
            let rep_names: Vec<String> = rep
                .classes()
                .iter()
                .map(|c| short_name(c).unwrap_or_else(|| c.to_string()))
                .collect();
            emit(
                format,
                format!(
                    "configuration {config}\ndynkin {dynkin}\norbit representative {} (row {ci})",
                    rep_names.join(",")
                ),
                json!({
                    "dynkin": dynkin.to_string(),
                    "representative": rep_names,
                    "ci": ci,
                }),
            );
        }
        LatticeAction::TwoSet(args) => {
            let config = parse_config(&args.config)?;
            let classes = match args.real {
                None => two_set(config.lattice(), &config).map_err(err)?,
                Some(ri) => {
                    let sigma = real_structure(ri).map_err(err)?;
                    real_two_set(&config, &sigma).map_err(err)?
                }
            };
            let (text, values) = class_strings(&classes);
            emit(
                format,
                format!("{} two-set classes\n{}", classes.len(), text.join("\n")),
                json!({ "count": classes.len(), "classes": values }),
            );
        }
        LatticeAction::OneSet(args) => {
            let config = parse_config(args)?;
            let classes = one_set(config.lattice(), &config).map_err(err)?;
            let (text, values) = class_strings(&classes);
            emit(
                format,
                format!("{} one-set classes\n{}", classes.len(), text.join("\n")),
                json!({ "count": classes.len(), "classes": values }),
            );
        }
        LatticeAction::Dynkin(args) => {
            let config = parse_config(args)?;
            let dynkin = dynkin_type(&config).map_err(err)?;
            emit(
                format,
                format!("{dynkin}"),
                json!({ "dynkin": dynkin.to_string() }),
            );
        }
    }
    Ok(true)
}
