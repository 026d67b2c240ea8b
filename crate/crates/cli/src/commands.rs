use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use graphburn::burning::{greedy_burn, random_schedule, simulate, verify_schedule, BurnError};
use graphburn::exact::{exact_burning_number_with_budget, ExactError};
use graphburn::graph::{build_grid, build_path, build_path_forest, build_random_graph};
use graphburn::grid::{burn_grid_2approx, burn_grid_with_subgrids, GridSpec};
use graphburn::io::{
    parse_graph, parse_instance, parse_schedule, write_graph, write_instance, write_intervals,
    write_permutation, write_schedule,
};
use graphburn::partition::{
    random_solvable_instance, solve_3partition, Partition3, PartitionError, ThreePartitionInstance,
};
use graphburn::reduction::{
    construct_ig, construct_px, derive_sets, emit_interval_representation, forest_permutation,
    partition_to_schedule, partition_to_schedule_pg, schedule_to_partition,
    schedule_to_partition_pg, ReductionError,
};
use graphburn::{BurningSchedule, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::args::{Command, DemoKind, GenCommand, GraphSource, ReportFormat};
use crate::artifact::{Artifact, Gadget, GadgetKind};
use crate::CliError;

pub fn dispatch(command: Command) -> Result<String, CliError> {
    match command {
        Command::Gen(g) => generate(g),
        Command::Verify { source, schedule } => verify(&source, &schedule),
        Command::Exact { source, budget } => exact(&source, budget.budget),
        Command::Grid {
            rows,
            cols,
            sub_rows,
            sub_cols,
            report,
        } => grid(rows, cols, sub_rows.zip(sub_cols), report),
        Command::ThreePart { input, budget } => three_part(&input, budget.budget),
        Command::ReduceIg {
            input,
            emit_graph,
            emit_intervals,
            witness,
            artifact,
            budget,
        } => reduce_ig(
            &input,
            emit_graph.as_deref(),
            emit_intervals.as_deref(),
            witness.as_deref(),
            artifact.as_deref(),
            budget.budget,
        ),
        Command::ExtractIg { artifact, schedule } => {
            extract(&artifact, &schedule, GadgetKind::Interval)
        }
        Command::ReducePg {
            input,
            emit_graph,
            emit_perm,
            witness,
            artifact,
            budget,
        } => reduce_pg(
            &input,
            emit_graph.as_deref(),
            emit_perm.as_deref(),
            witness.as_deref(),
            artifact.as_deref(),
            budget.budget,
        ),
        Command::ExtractPg { artifact, schedule } => {
            extract(&artifact, &schedule, GadgetKind::Permutation)
        }
        Command::Greedy { source } => greedy(&source),
        Command::Demo { which } => demo(which),
        Command::Sweep {
            trials,
            max_n,
            seed,
            jobs,
        } => sweep(trials, max_n, seed, jobs),
    }
}

pub fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Malformed(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| CliError::Malformed(format!("{}: {e}", path.display())))
}

fn malformed(path: &Path, e: impl std::fmt::Display) -> CliError {
    CliError::Malformed(format!("{}: {e}", path.display()))
}

fn load_graph(source: &GraphSource) -> Result<Graph, CliError> {
    match (&source.graph, &source.artifact) {
        (Some(path), _) => parse_graph(&read_file(path)?).map_err(|e| malformed(path, e)),
        (None, Some(path)) => Ok(Artifact::load(path)?.rebuild()?.graph().clone()),
        (None, None) => Err(CliError::Malformed("no graph given".into())),
    }
}

fn load_schedule(path: &Path) -> Result<BurningSchedule, CliError> {
    parse_schedule(&read_file(path)?).map_err(|e| malformed(path, e))
}

fn load_instance(path: &Path) -> Result<ThreePartitionInstance, CliError> {
    parse_instance(&read_file(path)?).map_err(|e| malformed(path, e))
}

/// Writes to `out` when given, otherwise returns the text for stdout.
fn emit(out: Option<&Path>, text: String) -> Result<String, CliError> {
    match out {
        Some(path) => {
            write_file(path, &text)?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn burn_error(e: BurnError) -> CliError {
    match e {
        BurnError::InvalidVertex { .. } | BurnError::EmptySchedule => {
            CliError::Malformed(e.to_string())
        }
        _ => CliError::Failed(e.to_string()),
    }
}

fn partition_error(e: PartitionError) -> CliError {
    match e {
        PartitionError::BudgetExhausted { .. } => CliError::Budget(e.to_string()),
        _ => CliError::Malformed(e.to_string()),
    }
}

fn reduction_error(e: ReductionError) -> CliError {
    match e {
        ReductionError::Burn(b) => burn_error(b),
        _ => CliError::Failed(e.to_string()),
    }
}

fn generate(cmd: GenCommand) -> Result<String, CliError> {
    let bad = |e: graphburn::GraphError| CliError::Malformed(e.to_string());
    match cmd {
        GenCommand::Path { n, out } => {
            emit(out.as_deref(), write_graph(&build_path(n).map_err(bad)?))
        }
        GenCommand::Grid { rows, cols, out } => emit(
            out.as_deref(),
            write_graph(&build_grid(rows, cols).map_err(bad)?),
        ),
        GenCommand::Forest { lengths, out } => emit(
            out.as_deref(),
            write_graph(&build_path_forest(&lengths).map_err(bad)?),
        ),
        GenCommand::Pg {
            lengths,
            out,
            emit_perm,
        } => {
            let (perm, _) = forest_permutation(&lengths).map_err(bad)?;
            let g = graphburn::graph::build_permutation_graph(perm.len(), &perm).map_err(bad)?;
            if let Some(path) = emit_perm {
                write_file(&path, &write_permutation(&perm))?;
            }
            emit(out.as_deref(), write_graph(&g))
        }
        GenCommand::Ig { input, out } => {
            let art = construct_ig(&load_instance(&input)?);
            emit(out.as_deref(), write_graph(&art.graph))
        }
        GenCommand::Random { n, p, seed, out } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            emit(
                out.as_deref(),
                write_graph(&build_random_graph(&mut rng, n, p)),
            )
        }
        GenCommand::Instance { n, max, seed, out } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (inst, _) = random_solvable_instance(&mut rng, n, max).ok_or_else(|| {
                CliError::Failed(format!("no solvable instance with n = {n} and max {max}"))
            })?;
            emit(out.as_deref(), write_instance(&inst))
        }
    }
}

fn verify(source: &GraphSource, schedule: &Path) -> Result<String, CliError> {
    let g = load_graph(source)?;
    let s = load_schedule(schedule)?;
    let outcome = simulate(&g, &s).map_err(burn_error)?;
    let covered = verify_schedule(&g, &s).map_err(burn_error)?;
    debug_assert_eq!(covered, outcome.complete);
    if outcome.complete {
        Ok(format!("complete in {} rounds\n", outcome.rounds_used))
    } else {
        Err(CliError::Failed(format!(
            "incomplete after {} rounds: {} of {} vertices unburnt",
            outcome.rounds_used,
            g.vertex_count() - outcome.final_burned().len(),
            g.vertex_count()
        )))
    }
}

fn exact(source: &GraphSource, budget: u64) -> Result<String, CliError> {
    let g = load_graph(source)?;
    match exact_burning_number_with_budget(&g, budget) {
        Ok(r) => Ok(format!(
            "k={}\nwitness: {}\nnodes: {}\n",
            r.k, r.witness, r.nodes_explored
        )),
        Err(e @ ExactError::BudgetExhausted { .. }) => Err(CliError::Budget(e.to_string())),
        Err(e) => Err(CliError::Malformed(e.to_string())),
    }
}

fn grid(
    rows: usize,
    cols: usize,
    subgrid: Option<(usize, usize)>,
    format: ReportFormat,
) -> Result<String, CliError> {
    let spec = GridSpec::new(rows, cols).map_err(|e| CliError::Malformed(e.to_string()))?;
    let report = match subgrid {
        Some((0, _)) | Some((_, 0)) => {
            return Err(CliError::Malformed(
                "subgrid dimensions must be positive".into(),
            ))
        }
        Some((h, w)) => burn_grid_with_subgrids(spec, h, w),
        None => burn_grid_2approx(spec),
    };
    Ok(match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
            s.push('\n');
            s
        }
        ReportFormat::Text => format!(
            "rounds: {}\nlower_bound: {}\nupper_bound: {}\nratio: {:.4}\nschedule: {}\n",
            report.rounds_used,
            report.lower_bound,
            report.upper_bound_formula,
            report.ratio,
            report.schedule
        ),
    })
}

fn three_part(input: &Path, budget: u64) -> Result<String, CliError> {
    let inst = load_instance(input)?;
    match solve_3partition(&inst, budget).map_err(partition_error)? {
        Some(p) => Ok(format!("{p}\n")),
        None => Ok("UNSAT\n".into()),
    }
}

/// Solves the instance for a witness, failing with exit 1 if unsolvable.
fn solve_for_witness(inst: &ThreePartitionInstance, budget: u64) -> Result<Partition3, CliError> {
    solve_3partition(inst, budget)
        .map_err(partition_error)?
        .ok_or_else(|| CliError::Failed("instance has no partition, so no optimal witness".into()))
}

fn reduce_ig(
    input: &Path,
    emit_graph: Option<&Path>,
    emit_intervals: Option<&Path>,
    witness: Option<&Path>,
    artifact: Option<&Path>,
    budget: u64,
) -> Result<String, CliError> {
    let inst = load_instance(input)?;
    let art = construct_ig(&inst);
    if let Some(path) = emit_graph {
        write_file(path, &write_graph(&art.graph))?;
    }
    if let Some(path) = emit_intervals {
        write_file(path, &write_intervals(&emit_interval_representation(&art)))?;
    }
    if let Some(path) = artifact {
        write_file(
            path,
            &Artifact::describe(GadgetKind::Interval, &inst, &art.graph).to_json(),
        )?;
    }
    let mut out = format!(
        "vertices: {}\nedges: {}\nspine: {}\nrounds: {}\n",
        art.graph.vertex_count(),
        art.graph.edge_count(),
        art.spine.len(),
        art.rounds()
    );
    if let Some(path) = witness {
        let p = solve_for_witness(&inst, budget)?;
        let s = partition_to_schedule(&art, &p).map_err(reduction_error)?;
        write_file(path, &write_schedule(&s))?;
        writeln!(out, "witness: {} sources", s.len()).expect("string write");
    }
    Ok(out)
}

fn reduce_pg(
    input: &Path,
    emit_graph: Option<&Path>,
    emit_perm: Option<&Path>,
    witness: Option<&Path>,
    artifact: Option<&Path>,
    budget: u64,
) -> Result<String, CliError> {
    let inst = load_instance(input)?;
    let art = construct_px(&inst);
    if let Some(path) = emit_graph {
        write_file(path, &write_graph(&art.graph))?;
    }
    if let Some(path) = emit_perm {
        write_file(path, &write_permutation(&art.permutation))?;
    }
    if let Some(path) = artifact {
        write_file(
            path,
            &Artifact::describe(GadgetKind::Permutation, &inst, &art.graph).to_json(),
        )?;
    }
    let lengths: Vec<String> = art.plan.lengths().iter().map(usize::to_string).collect();
    let mut out = format!(
        "vertices: {}\ncomponents: {}\norders: {}\nrounds: {}\n",
        art.graph.vertex_count(),
        art.paths.len(),
        lengths.join(" "),
        art.rounds()
    );
    if let Some(path) = witness {
        let p = solve_for_witness(&inst, budget)?;
        let s = partition_to_schedule_pg(&art, &p).map_err(reduction_error)?;
        write_file(path, &write_schedule(&s))?;
        writeln!(out, "witness: {} sources", s.len()).expect("string write");
    }
    Ok(out)
}

fn extract(artifact: &Path, schedule: &Path, want: GadgetKind) -> Result<String, CliError> {
    let desc = Artifact::load(artifact)?;
    if desc.kind != want {
        return Err(CliError::Malformed(format!(
            "{}: artifact is a {:?} gadget",
            artifact.display(),
            desc.kind
        )));
    }
    let s = load_schedule(schedule)?;
    let p = match desc.rebuild()? {
        Gadget::Interval(art) => schedule_to_partition(&art, &s),
        Gadget::Permutation(art) => schedule_to_partition_pg(&art, &s),
    }
    .map_err(reduction_error)?;
    Ok(format!("{p}\n"))
}

fn greedy(source: &GraphSource) -> Result<String, CliError> {
    let g = load_graph(source)?;
    let s = greedy_burn(&g);
    Ok(format!("rounds: {}\nschedule: {s}\n", s.len()))
}

fn example_instance() -> ThreePartitionInstance {
    parse_instance("10 11 12 14 15 16").expect("worked example is valid")
}

fn fmt_list<T: ToString>(values: &[T]) -> String {
    let parts: Vec<String> = values.iter().map(T::to_string).collect();
    parts.join(" ")
}

fn demo(which: DemoKind) -> Result<String, CliError> {
    let inst = example_instance();
    let d = derive_sets(&inst);
    let mut out = String::new();
    let w = &mut out;
    writeln!(w, "instance: {inst}").unwrap();
    writeln!(
        w,
        "n={} B={} m={} k={}",
        inst.n(),
        inst.target(),
        inst.max(),
        inst.spare()
    )
    .unwrap();
    writeln!(
        w,
        "shifted: {}  target {}",
        fmt_list(&d.shifted),
        d.shifted_target
    )
    .unwrap();
    writeln!(w, "fillers: {}", fmt_list(&d.fillers)).unwrap();
    let p = solve_3partition(&inst, u64::MAX)
        .map_err(partition_error)?
        .expect("worked example is solvable");
    writeln!(w, "partition: {}", p.to_string().replace('\n', " | ")).unwrap();
    match which {
        DemoKind::Interval => {
            let art = construct_ig(&inst);
            writeln!(w, "tooth orders: {}", fmt_list(&art.tooth_orders())).unwrap();
            writeln!(
                w,
                "vertices: {}  spine: {}",
                art.graph.vertex_count(),
                art.spine.len()
            )
            .unwrap();
            let s = partition_to_schedule(&art, &p).map_err(reduction_error)?;
            let outcome = simulate(&art.graph, &s).map_err(burn_error)?;
            writeln!(
                w,
                "schedule: {} rounds, complete: {}",
                outcome.rounds_used, outcome.complete
            )
            .unwrap();
            let back = schedule_to_partition(&art, &s).map_err(reduction_error)?;
            writeln!(w, "recovered: {}", back.to_string().replace('\n', " | ")).unwrap();
        }
        DemoKind::Permutation => {
            let art = construct_px(&inst);
            writeln!(w, "component orders: {}", fmt_list(&art.plan.lengths())).unwrap();
            writeln!(w, "vertices: {}", art.graph.vertex_count()).unwrap();
            let s = partition_to_schedule_pg(&art, &p).map_err(reduction_error)?;
            let outcome = simulate(&art.graph, &s).map_err(burn_error)?;
            writeln!(
                w,
                "schedule: {} rounds, complete: {}",
                outcome.rounds_used, outcome.complete
            )
            .unwrap();
            let back = schedule_to_partition_pg(&art, &s).map_err(reduction_error)?;
            writeln!(w, "recovered: {}", back.to_string().replace('\n', " | ")).unwrap();
        }
    }
    Ok(out)
}

/// One sweep trial: random graph, random legal schedule, both checks.
fn sweep_trial(seed: u64, trial: u64, max_n: usize) -> (bool, bool) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    let n = rng.gen_range(1..=max_n);
    let p = rng.gen_range(0.0..0.4);
    let g = build_random_graph(&mut rng, n, p);
    let len = rng.gen_range(1..=n);
    let s = random_schedule(&g, &mut rng, len);
    let complete = simulate(&g, &s).expect("schedule is legal").complete;
    let covered = verify_schedule(&g, &s).expect("schedule is well formed");
    (complete == covered, complete)
}

fn sweep(trials: usize, max_n: usize, seed: u64, jobs: usize) -> Result<String, CliError> {
    if max_n == 0 || jobs == 0 {
        return Err(CliError::Malformed(
            "--max-n and --jobs must be positive".into(),
        ));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Failed(e.to_string()))?;
    let results: Vec<(bool, bool)> = pool.install(|| {
        (0..trials as u64)
            .into_par_iter()
            .map(|t| sweep_trial(seed, t, max_n))
            .collect()
    });
    let agree = results.iter().filter(|r| r.0).count();
    let complete = results.iter().filter(|r| r.1).count();
    let text = format!("trials: {trials}\nagree: {agree}\ncomplete: {complete}\n");
    if agree == trials {
        Ok(text)
    } else {
        let first = results.iter().position(|r| !r.0).expect("a disagreement");
        Err(CliError::Failed(format!(
            "{text}first disagreement at trial {first}"
        )))
    }
}
