//! Subcommand definitions and dispatch.

use std::io::Read;

use bargain_core::hypergraph::{gen_fano, gen_symmetric, gen_wheel, seymour_join};
use bargain_core::jordan::{connector_hypergraphs, jordan_correspondence};
use bargain_core::monotone::{count_monotone_maps, enumerate_monotone_maps};
use bargain_core::multiplayer::{
    build3, certify_no_ne, certify_not_tight, frozen_utilities, realize_utilities, NoNeReport, Player3,
};
use bargain_core::solver::{brute_force_equilibria, ENUMERATION_BOUND};
use bargain_core::{
    build_correspondence, check_dual, deals, dualize, DualityVerdict, DualityWitness, Error, Hypergraph, MonotoneMap,
    Outcome, UtilityProfile,
};
use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::formats::{
    pair, CorrespondenceJson, EquilibriumJson, FormJson, HypergraphJson, LabelUtilityJson, MapJson, UtilityJson,
};
use crate::render;

pub const DEFAULT_SEED: u64 = 0x5eed;

const FIVE_AREA_MAP: &str = include_str!("../fixtures/five_area_map.json");

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::BoundExceeded { .. }) => 2,
            CliError::Core(Error::NotTight(_) | Error::EmptyCell { .. } | Error::AmbiguousCell { .. }) => 4,
            CliError::Core(Error::ValidationFailure(_) | Error::RealizationInfeasible(_)) => 5,
            CliError::Core(_) | CliError::Input(_) | CliError::Usage(_) => 3,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Parser)]
#[command(name = "bargain", version, about = "Monotone bargaining games and tight game forms")]
pub struct Cli {
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Seed for randomized generators.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the game correspondence G_{m,n} (default: table).
    Corr {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Find a simple Nash equilibrium of G_{m,n} for a utility file.
    Solve {
        /// Utility JSON, or `-` for stdin.
        #[arg(long, default_value = "-")]
        utility: String,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Check an equilibrium against every unilateral deviation. Exits 1 when
    /// it is not an equilibrium.
    Verify {
        #[arg(long)]
        utility: String,
        /// Equilibrium JSON as printed by `solve`.
        #[arg(long)]
        equilibrium: String,
    },
    /// Decide whether two hypergraphs are dual.
    Tight {
        /// Test one hypergraph against itself (file or stdin).
        #[arg(long = "self", value_name = "PATH", num_args = 0..=1, default_missing_value = "-", conflicts_with_all = ["c", "d"])]
        self_dual: Option<String>,
        #[arg(long, requires = "d")]
        c: Option<String>,
        #[arg(long, requires = "c")]
        d: Option<String>,
    },
    /// Print the minimal transversals of a hypergraph.
    Dualize {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Print the inclusion-minimal edges of a hypergraph.
    Sperner {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Generate a hypergraph family or a utility file.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Connector correspondence of a planar map (default: the five-area map).
    Jordan { map: Option<String> },
    /// Three-player counterexample: not tight, and no pure equilibrium.
    Demo3 {
        /// Recompute the utilities instead of using the stored ones.
        #[arg(long)]
        realize: bool,
    },
    /// Brute-force pure equilibria of a labelled game form.
    OracleNe {
        #[arg(long)]
        form: String,
        /// Utilities keyed by outcome label.
        #[arg(long)]
        utility: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum Family {
    Fano,
    Wheel {
        #[arg(long)]
        k: usize,
    },
    /// All k-subsets of k + l - 1 points; its dual is `--k L --l K`.
    Symmetric {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
    },
    /// Self-dual join of a dual pair.
    Seymour {
        #[arg(long)]
        c: String,
        #[arg(long)]
        d: String,
    },
    /// A utility file for G_{m,n}.
    Utility {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = UtilityKind::Random)]
        kind: UtilityKind,
        /// Random values lie in `-range..=range`.
        #[arg(long, default_value_t = 9)]
        range: i64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum UtilityKind {
    Random,
    /// Alice prefers small i and large j, Bob the reverse.
    Natural,
    Zero,
}

/// Text to print and the exit code.
#[derive(Debug, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

fn read_input(path: &str) -> CliResult<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Input(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{path}: {e}")))
    }
}

fn parse<T: serde::de::DeserializeOwned>(path: &str) -> CliResult<T> {
    let text = read_input(path)?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{path}: {e}")))
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("output types serialize");
    s.push('\n');
    s
}

fn read_hypergraph(path: &str) -> CliResult<Hypergraph> {
    Ok(parse::<HypergraphJson>(path)?.to_core()?)
}

fn hypergraph_out(h: &Hypergraph) -> String {
    to_json(&HypergraphJson::from_core(h))
}

pub fn run(cli: Cli) -> CliResult<Output> {
    let format = cli.format;
    match cli.command {
        Command::Corr { m, n } => corr(m, n, format.unwrap_or(Format::Table)),
        Command::Solve { utility, m, n } => solve(&utility, m, n),
        Command::Verify { utility, equilibrium } => verify(&utility, &equilibrium),
        Command::Tight { self_dual, c, d } => tight(self_dual, c, d, format.unwrap_or(Format::Json)),
        Command::Dualize { input } => Ok(Output::ok(hypergraph_out(&dualize(&read_hypergraph(&input)?)?))),
        Command::Sperner { input } => Ok(Output::ok(hypergraph_out(&read_hypergraph(&input)?.sperner_reduce()))),
        Command::Gen { family } => generate(family, cli.seed),
        Command::Jordan { map } => jordan(map.as_deref(), format.unwrap_or(Format::Table)),
        Command::Demo3 { realize } => demo3(realize, format.unwrap_or(Format::Table)),
        Command::OracleNe { form, utility } => oracle_ne(&form, &utility),
    }
}

fn corr(m: usize, n: usize, format: Format) -> CliResult<Output> {
    let g = build_correspondence(m, n)?;
    Ok(Output::ok(match format {
        Format::Table => render::correspondence(&g),
        Format::Json => to_json(&CorrespondenceJson::from_core(&g)),
    }))
}

fn read_utility(path: &str, m: Option<usize>, n: Option<usize>) -> CliResult<(UtilityJson, UtilityProfile)> {
    let file: UtilityJson = parse(path)?;
    for (flag, given, actual) in [("m", m, file.m), ("n", n, file.n)] {
        if given.is_some_and(|g| g != actual) {
            return Err(CliError::Input(format!(
                "--{flag} {} disagrees with the utility file ({actual})",
                given.unwrap()
            )));
        }
    }
    let u = file.to_profile().map_err(CliError::Input)?;
    Ok((file, u))
}

fn solve(path: &str, m: Option<usize>, n: Option<usize>) -> CliResult<Output> {
    let (file, u) = read_utility(path, m, n)?;
    let eq = bargain_core::solve_monotone(file.m, file.n, &u)?;
    Ok(Output::ok(to_json(&EquilibriumJson::from_core(file.n, &eq))))
}

/// Scans every unilateral deviation of both players directly on the deal sets.
fn verify(utility: &str, equilibrium: &str) -> CliResult<Output> {
    let (file, u) = read_utility(utility, None, None)?;
    let (m, n) = (file.m, file.n);
    let eq: EquilibriumJson = parse(equilibrium)?;
    let x = MonotoneMap::new(eq.x.clone(), n)?;
    let y = MonotoneMap::new(eq.y.clone(), m)?;
    if x.domain() != m || y.domain() != n {
        return Err(CliError::Input(format!("strategies do not fit G_{{{m},{n}}}")));
    }
    let here = deals(&x, &y);
    let [o] = here[..] else {
        return Err(CliError::Core(Error::AmbiguousCell { row: 0, col: 0 }));
    };
    if pair(o) != eq.outcome {
        return Err(CliError::Input(format!(
            "profile yields {:?}, file claims {:?}",
            pair(o),
            eq.outcome
        )));
    }
    for (domain, codomain) in [(m, n), (n, m)] {
        let count = count_monotone_maps(domain, codomain).unwrap_or(u128::MAX);
        if count > ENUMERATION_BOUND {
            return Err(Error::BoundExceeded {
                what: "deviation count",
                limit: ENUMERATION_BOUND,
                actual: count,
            }
            .into());
        }
    }
    let value = |v: &[i64], d: Outcome| v[d.index(n)];
    let mut checked = 0usize;
    let mut improvement: Option<(&str, Vec<usize>, [usize; 2])> = None;
    'scan: for (who, maps) in [
        ("A", enumerate_monotone_maps(m, n)),
        ("B", enumerate_monotone_maps(n, m)),
    ] {
        for dev in maps {
            let ds = if who == "A" { deals(&dev, &y) } else { deals(&x, &dev) };
            checked += 1;
            let better = ds.iter().copied().find(|&d| {
                if who == "A" {
                    value(&u.ua, d) > value(&u.ua, o)
                } else {
                    value(&u.ub, d) > value(&u.ub, o)
                }
            });
            if let Some(d) = better {
                improvement = Some((who, dev.values().to_vec(), pair(d)));
                break 'scan;
            }
        }
    }
    let report = match &improvement {
        None => json!({ "equilibrium": true, "outcome": pair(o), "deviations_checked": checked }),
        Some((who, dev, d)) => json!({
            "equilibrium": false,
            "outcome": pair(o),
            "improvement": { "player": who, "strategy": dev, "outcome": d },
        }),
    };
    Ok(Output {
        text: to_json(&report),
        code: if improvement.is_none() { 0 } else { 1 },
    })
}

fn witness_json(c: &Hypergraph, d: &Hypergraph, v: &DualityVerdict) -> serde_json::Value {
    fn labels(h: &Hypergraph, s: bargain_core::VertexSet) -> Vec<&str> {
        h.labels_of(s)
    }
    match v.witness {
        None => serde_json::Value::Null,
        Some(DualityWitness::Disjoint { c_edge, d_edge }) => json!({
            "kind": "disjoint edges",
            "c": labels(c, c.edges()[c_edge]),
            "d": labels(d, d.edges()[d_edge]),
        }),
        Some(DualityWitness::TransversalOfFirst(s)) => {
            json!({ "kind": "transversal of c", "set": labels(c, s) })
        }
        Some(DualityWitness::TransversalOfSecond(s)) => {
            json!({ "kind": "transversal of d", "set": labels(d, s) })
        }
    }
}

fn tight(self_dual: Option<String>, c: Option<String>, d: Option<String>, format: Format) -> CliResult<Output> {
    let (hc, hd) = match (self_dual, c, d) {
        (Some(p), _, _) => {
            let h = read_hypergraph(&p)?;
            (h.clone(), h)
        }
        (None, Some(c), Some(d)) => {
            if c == "-" && d == "-" {
                return Err(CliError::Usage("only one of --c and --d may read stdin".into()));
            }
            (read_hypergraph(&c)?, read_hypergraph(&d)?)
        }
        _ => return Err(CliError::Usage("give --self, or both --c and --d".into())),
    };
    let verdict = check_dual(&hc, &hd)?;
    let witness = witness_json(&hc, &hd, &verdict);
    Ok(Output::ok(match format {
        Format::Json => to_json(&json!({ "dual": verdict.dual, "witness": witness })),
        Format::Table if verdict.dual => "dual\n".to_string(),
        Format::Table => format!("not dual\nwitness: {witness}\n"),
    }))
}

fn generate(family: Family, seed: u64) -> CliResult<Output> {
    let h = match family {
        Family::Fano => gen_fano(),
        Family::Wheel { k } => gen_wheel(k)?,
        Family::Symmetric { k, l } => gen_symmetric(k, l)?.0,
        Family::Seymour { c, d } => seymour_join(&read_hypergraph(&c)?, &read_hypergraph(&d)?)?,
        Family::Utility { m, n, kind, range } => return gen_utility(m, n, kind, range, seed),
    };
    Ok(Output::ok(hypergraph_out(&h)))
}

fn gen_utility(m: usize, n: usize, kind: UtilityKind, range: i64, seed: u64) -> CliResult<Output> {
    if m == 0 || n == 0 {
        return Err(CliError::Usage("m and n must be positive".into()));
    }
    if range < 0 {
        return Err(CliError::Usage("range must be non-negative".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cell = |i: usize, j: usize| -> (i64, i64) {
        match kind {
            UtilityKind::Random => (rng.gen_range(-range..=range), rng.gen_range(-range..=range)),
            UtilityKind::Natural => (j as i64 - i as i64, i as i64 - j as i64),
            UtilityKind::Zero => (0, 0),
        }
    };
    let (mut ua, mut ub) = (Vec::with_capacity(m * n), Vec::with_capacity(m * n));
    for i in 1..=m {
        for j in 1..=n {
            let (a, b) = cell(i, j);
            ua.push(a);
            ub.push(b);
        }
    }
    let u = UtilityProfile::new(ua, ub)?;
    Ok(Output::ok(to_json(&UtilityJson::from_profile(m, n, &u))))
}

fn jordan(path: Option<&str>, format: Format) -> CliResult<Output> {
    let file: MapJson = match path {
        Some(p) => parse(p)?,
        None => serde_json::from_str(FIVE_AREA_MAP).map_err(|e| CliError::Input(format!("bundled map: {e}")))?,
    };
    let map = file.to_core()?;
    let table = jordan_correspondence(&map)?;
    let (rows, cols) = connector_hypergraphs(&map)?;
    let verdict = check_dual(&rows, &cols)?;
    Ok(Output::ok(match format {
        Format::Table => format!(
            "{}{}\n",
            render::cell_table(&table),
            if verdict.dual { "dual" } else { "not dual" }
        ),
        Format::Json => {
            let cells: Vec<Vec<&str>> = table
                .cells
                .iter()
                .map(|c| c.iter().map(|v| table.outcomes[v].as_str()).collect())
                .collect();
            to_json(&json!({
                "rows": HypergraphJson::from_core(&rows).edges,
                "cols": HypergraphJson::from_core(&cols).edges,
                "cells": cells,
                "dual": verdict.dual,
                "witness": witness_json(&rows, &cols, &verdict),
            }))
        }
    }))
}

fn player_name(p: Player3) -> String {
    p.letter().to_string()
}

fn demo3(realize: bool, format: Format) -> CliResult<Output> {
    let cert = certify_not_tight()?;
    let u = if realize {
        let u = realize_utilities()?;
        if u != frozen_utilities() {
            return Err(Error::ValidationFailure("realized utilities differ from the stored ones".into()).into());
        }
        u
    } else {
        frozen_utilities()
    };
    let report = certify_no_ne(&u)?;
    let witness = cert.h_a.labels_of(cert.witness);
    Ok(Output::ok(match format {
        Format::Json => to_json(&demo3_json(&cert.h_a, &cert.h_bc, &witness, &report)),
        Format::Table => demo3_text(&witness, &report),
    }))
}

fn demo3_json(h_a: &Hypergraph, h_bc: &Hypergraph, witness: &[&str], report: &NoNeReport) -> serde_json::Value {
    let g = build3(2, 2, 2).expect("G_{2,2,2} is within bounds");
    let forms: Vec<_> = report
        .forms
        .iter()
        .map(|f| {
            json!({
                "selection": f.selection.iter().map(|o| format!("{o:?}")).collect::<Vec<_>>(),
                "equilibria": f.equilibria,
                "improvers": g
                    .profiles()
                    .zip(&f.improvers)
                    .map(|(p, who)| json!({ "profile": p.map(|v| v + 1), "improver": who.map(player_name) }))
                    .collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "h_a": HypergraphJson::from_core(h_a),
        "h_bc": HypergraphJson::from_core(h_bc),
        "dual": false,
        "witness": witness,
        "utilities": {
            "A": report.utilities.of(Player3::Alice),
            "B": report.utilities.of(Player3::Bob),
            "C": report.utilities.of(Player3::Claire),
        },
        "forms": forms,
        "equilibria": report.ne_found(),
    })
}

fn demo3_text(witness: &[&str], report: &NoNeReport) -> String {
    let mut out = String::new();
    out.push_str("G_{2,2,2}: H_A and H_BC are not dual\n");
    out.push_str(&format!(
        "witness: {{{}}} meets every edge of H_A and contains no edge of H_BC\n",
        witness.join(", ")
    ));
    out.push_str("utilities over 111 112 121 122 211 212 221 222:\n");
    for p in Player3::ALL {
        let vals: Vec<String> = report.utilities.of(p).iter().map(i64::to_string).collect();
        out.push_str(&format!("  {}: {}\n", p.letter(), vals.join(" ")));
    }
    let g = build3(2, 2, 2).expect("G_{2,2,2} is within bounds");
    for (k, f) in report.forms.iter().enumerate() {
        let sel: Vec<String> = f.selection.iter().map(|o| format!("{o:?}")).collect();
        out.push_str(&format!(
            "form {} (selecting {}): {} equilibria\n",
            k + 1,
            sel.join(", "),
            f.equilibria.len()
        ));
        // One 3x3 block per Claire strategy; entries show the outcome and an
        // improving player.
        let heads: Vec<String> = (1..=3).map(|y| format!("y{y}")).collect();
        let rows: Vec<String> = (1..=3).map(|x| format!("x{x}")).collect();
        for z in 0..3 {
            let cells: Vec<String> = (0..9)
                .map(|t| {
                    let p = [t / 3, t % 3, z];
                    let k = g.profile_index(p);
                    let o = match g.cells[k][..] {
                        [o] => o,
                        _ => f.selection[g.cells[..k].iter().filter(|c| c.len() > 1).count()],
                    };
                    let who = f.improvers[k].map_or("-".to_string(), player_name);
                    format!("{} {who}", &format!("{o:?}")[1..])
                })
                .collect();
            out.push_str(&render::grid(&format!("z{}", z + 1), &heads, &rows, &cells));
        }
    }
    out.push_str(&format!("total: {} equilibria\n", report.ne_found()));
    out
}

fn oracle_ne(form: &str, utility: &str) -> CliResult<Output> {
    let fj: FormJson = parse(form)?;
    let g = fj.to_core().map_err(CliError::Input)?;
    let u = parse::<LabelUtilityJson>(utility)?
        .to_profile(&fj.outcomes)
        .map_err(CliError::Input)?;
    let eqs = brute_force_equilibria(&g, &u)?;
    let list: Vec<_> = eqs
        .iter()
        .map(|&(r, c)| json!({ "row": r + 1, "col": c + 1, "outcome": fj.outcomes[g.cell(r, c)] }))
        .collect();
    Ok(Output::ok(to_json(&json!({ "equilibria": list }))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use bargain_core::jordan::five_area_map;

    fn run_args(args: &[&str]) -> CliResult<Output> {
        let mut full = vec!["bargain"];
        full.extend_from_slice(args);
        run(Cli::try_parse_from(full).map_err(|e| CliError::Usage(e.to_string()))?)
    }

    #[test]
    fn corr_bound_maps_to_exit_2() {
        let err = run_args(&["corr", "--m", "7", "--n", "6"]).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn corr_single_cell() {
        let out = run_args(&["corr", "--m", "1", "--n", "1"]).unwrap();
        assert_eq!(out.text, "x\\y | 1\n----+---\n1   | 11\n");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Core(Error::NotTight("x".into())).exit_code(), 4);
        assert_eq!(CliError::Core(Error::AmbiguousCell { row: 0, col: 0 }).exit_code(), 4);
        assert_eq!(CliError::Core(Error::ValidationFailure("x".into())).exit_code(), 5);
        assert_eq!(CliError::Core(Error::InvalidArgument("x".into())).exit_code(), 3);
        assert_eq!(CliError::Input("x".into()).exit_code(), 3);
    }

    #[test]
    fn symmetric_generator_pairs_are_dual() {
        let c = gen_symmetric(2, 3).unwrap().0;
        let d = gen_symmetric(3, 2).unwrap().0;
        assert!(check_dual(&c, &d).unwrap().dual);
    }

    #[test]
    fn bundled_map_is_the_five_area_map() {
        let file: MapJson = serde_json::from_str(FIVE_AREA_MAP).unwrap();
        assert_eq!(file.to_core().unwrap(), five_area_map());
    }

    #[test]
    fn generated_utilities_depend_only_on_seed() {
        let a = gen_utility(3, 4, UtilityKind::Random, 9, 7).unwrap();
        let b = gen_utility(3, 4, UtilityKind::Random, 9, 7).unwrap();
        let c = gen_utility(3, 4, UtilityKind::Random, 9, 8).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }
}
