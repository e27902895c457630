use std::collections::{BTreeMap, VecDeque};
use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use super::output::{check_point, open_output, to_json_value};
use super::{format_number, CliError, OutputFormat, RunConfig, CSV_HEADER, THREADS_ENV};
use crate::analysis::{
    classify_regime, detect_convergence, estimate_gamma0, ln_phi, omega_limit_estimate, persistence_report,
    phi_decay, sector, sojourn_stats, window_diameter, CesaroState, OmegaEstimate, Persistence, PersistenceReport,
    PhiDecay, Regime, Sector, Sojourn,
};
use crate::dynamics::{iterate, DynamicsError, IterateOptions, Observables, Orbit, Parameters, SpeedFunction};
use crate::ode::{convergence_study, OdeError};
use crate::simplex::{classify_region, SimplexPoint, DEFAULT_ZERO_TOL};

fn finish(mut w: Box<dyn Write>) -> Result<(), CliError> {
    w.flush().map_err(CliError::from)
}

// ---------------------------------------------------------------- simulate

pub fn cmd_simulate(cfg: &RunConfig) -> Result<(), CliError> {
    cfg.resolve()?;
    let mut w = open_output(cfg)?;
    simulate_to(cfg, &mut w)?;
    finish(w)
}

/// Writes the orbit in the configured format and returns the step at
/// which log-domain iteration took over, if it did.
pub fn simulate_to(cfg: &RunConfig, w: &mut dyn Write) -> Result<Option<u64>, CliError> {
    let run = cfg.resolve()?;
    let mut orbit = Orbit::new(run.x0, run.params, run.speed, cfg.log_domain);
    let obs = cfg.observables;
    let mut body: Vec<u8> = Vec::new();
    let mut count = 0u64;
    let sink: &mut dyn Write = match cfg.format {
        OutputFormat::Csv => {
            writeln!(w, "{CSV_HEADER}")?;
            &mut *w
        }
        OutputFormat::Json => &mut body,
    };
    for item in orbit.by_ref().take(cfg.steps as usize + 1) {
        let (n, p) = item?;
        if n % cfg.stride != 0 {
            continue;
        }
        let x = check_point(&p, n)?;
        let phi = obs.phi.then(|| ln_phi(&p, &run.params).exp());
        let sec = obs.sector.then(|| sector(&p, &run.params));
        match cfg.format {
            OutputFormat::Csv => writeln!(
                sink,
                "{n},{},{},{},{},{}",
                format_number(x[0]),
                format_number(x[1]),
                format_number(x[2]),
                phi.map(format_number).unwrap_or_default(),
                sec.map(|s| s.to_string()).unwrap_or_default(),
            )?,
            OutputFormat::Json => {
                if count > 0 {
                    sink.write_all(b",")?;
                }
                write!(
                    sink,
                    "\n{{\"step\":{n},\"x1\":{},\"x2\":{},\"x3\":{},\"phi\":{},\"sector\":{}",
                    format_number(x[0]),
                    format_number(x[1]),
                    format_number(x[2]),
                    phi.map(format_number).unwrap_or_else(|| "null".into()),
                    sec.map(|s| format!("\"{s}\"")).unwrap_or_else(|| "null".into()),
                )?;
                if obs.region {
                    let region = serde_json::to_string(&classify_region(&p, DEFAULT_ZERO_TOL))
                        .map_err(|e| CliError::Numeric(e.to_string()))?;
                    write!(sink, ",\"region\":{region}")?;
                }
                sink.write_all(b"}")?;
            }
        }
        count += 1;
    }
    let log_from = orbit.log_domain_from();
    match cfg.format {
        OutputFormat::Csv => {
            if let Some(step) = log_from {
                eprintln!("simplexflow: log-domain iteration from step {step}");
            }
        }
        OutputFormat::Json => {
            let header = json!({
                "config": to_json_value(cfg)?,
                "log_domain_from": log_from,
                "samples": count,
            });
            write!(w, "{{\"header\":{header},\"records\":[")?;
            w.write_all(&body)?;
            writeln!(w, "\n]}}")?;
        }
    }
    Ok(log_from)
}

// ---------------------------------------------------------------- analyze

#[derive(Debug, Clone, Serialize)]
pub struct CesaroSnapshot {
    pub n: u64,
    /// `c_0, …, c_K` at step `n`.
    pub means: Vec<[f64; 3]>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditSummary {
    /// `γ̂₀ = 2^{-k}`.
    pub gamma0_exponent: u64,
    pub ln_gamma0: f64,
    pub audited_transitions: u64,
    pub sector_changes: u64,
    pub violations: u64,
    pub filtered_visits: BTreeMap<String, u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VertexSojourns {
    pub count: usize,
    pub longest: u64,
    pub listed: Vec<Sojourn>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PersistenceSummary {
    #[serde(flatten)]
    pub report: PersistenceReport,
    pub hint: Persistence,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub config: RunConfig,
    pub log_domain_from: Option<u64>,
    pub regime: Regime,
    pub predicted_limit: Option<SimplexPoint>,
    pub persistence_class: Persistence,
    pub basis: &'static str,
    /// Last point if the orbit settled within the configured tolerance.
    pub limit: Option<SimplexPoint>,
    pub final_point: Option<SimplexPoint>,
    pub phi_decay: Option<PhiDecay>,
    /// Samples per sector over the whole run.
    pub sector_visits: BTreeMap<String, u64>,
    /// Cyclic-order audit under the estimated `γ̂₀`; needs stride 1.
    pub cycle_audit: Option<AuditSummary>,
    pub cycle_audit_note: Option<String>,
    pub sojourns: BTreeMap<String, VertexSojourns>,
    pub cesaro: Vec<CesaroSnapshot>,
    pub persistence: Option<PersistenceSummary>,
    pub omega: OmegaEstimate,
}

fn sector_map(counts: &[u64; 6]) -> BTreeMap<String, u64> {
    Sector::ALL.iter().map(|s| (s.to_string(), counts[*s as usize])).collect()
}

pub fn analyze_report(cfg: &RunConfig) -> Result<AnalysisReport, CliError> {
    let run = cfg.resolve()?;
    let spec = &cfg.analysis;
    let opts = IterateOptions::new(cfg.steps)
        .stride(cfg.stride)
        .domain(cfg.log_domain)
        .observables(Observables {
            phi: true,
            sector: true,
            region: false,
        });
    let traj = iterate(run.x0, &run.params, &run.speed, &opts)?;
    for s in &traj.samples {
        check_point(&s.point, s.step)?;
    }
    let regime = classify_regime(&run.params);

    let mut visits = [0u64; 6];
    for s in &traj.samples {
        let sec = s.observation.and_then(|o| o.sector).unwrap_or_else(|| sector(&s.point, &run.params));
        visits[sec as usize] += 1;
    }

    let (cycle_audit, cycle_audit_note) = match estimate_gamma0(&traj) {
        Ok(est) => (
            Some(AuditSummary {
                gamma0_exponent: est.k,
                ln_gamma0: est.ln_gamma,
                audited_transitions: est.audit.audited_transitions,
                sector_changes: est.audit.changes.len() as u64,
                violations: est.audit.violations.len() as u64,
                filtered_visits: sector_map(&est.audit.visits),
            }),
            None,
        ),
        Err(e) => (None, Some(e.to_string())),
    };

    let sojourns = sojourn_stats(&traj, spec.vertex_eps);
    let sojourns = (0..3)
        .map(|v| {
            let list = &sojourns[v];
            (
                format!("e{}", v + 1),
                VertexSojourns {
                    count: list.len(),
                    longest: list.iter().map(|s| s.duration()).max().unwrap_or(0),
                    listed: list.iter().take(spec.max_sojourns_listed).copied().collect(),
                },
            )
        })
        .collect();

    let mut cesaro = Vec::new();
    let mut state = CesaroState::new(spec.cesaro_order).map_err(|e| CliError::Config(e.to_string()))?;
    let mut next_snapshot = 1u64;
    let last_index = traj.samples.len().saturating_sub(1) as u64;
    for (i, s) in traj.samples.iter().enumerate() {
        state.push(&s.point);
        let i = i as u64;
        if i == next_snapshot || i == last_index {
            cesaro.push(CesaroSnapshot {
                n: s.step,
                means: state.means().to_vec(),
            });
        }
        if i == next_snapshot {
            next_snapshot *= 10;
        }
    }

    let burn_in = traj.samples.last().map_or(0, |s| s.step / 2);
    Ok(AnalysisReport {
        config: cfg.clone(),
        log_domain_from: traj.log_domain_from,
        regime: regime.regime,
        predicted_limit: regime.predicted_limit,
        persistence_class: regime.persistence,
        basis: regime.basis,
        limit: detect_convergence(&traj, spec.convergence_tol, spec.convergence_window),
        final_point: traj.last().copied(),
        phi_decay: phi_decay(&traj),
        sector_visits: sector_map(&visits),
        cycle_audit,
        cycle_audit_note,
        sojourns,
        cesaro,
        persistence: persistence_report(&traj).map(|report| PersistenceSummary {
            hint: report.hint(),
            report,
        }),
        omega: omega_limit_estimate(&traj, burn_in, spec.omega_grid),
    })
}

pub fn cmd_analyze(cfg: &RunConfig) -> Result<(), CliError> {
    let report = analyze_report(cfg)?;
    let mut w = open_output(cfg)?;
    serde_json::to_writer_pretty(&mut w, &report).map_err(|e| CliError::Io(e.to_string()))?;
    writeln!(w)?;
    finish(w)
}

// ---------------------------------------------------------------- sweep

pub const SWEEP_HEADER: &str = "a,b,c,f,x0_1,x0_2,x0_3,regime,limit_x1,limit_x2,limit_x3,ln_phi_final,\
visits_g1,visits_g2,visits_g3,visits_g4,visits_g5,visits_g6,status";

#[derive(Debug, Clone, PartialEq)]
pub struct RunSummary {
    pub regime: Regime,
    pub limit: Option<[f64; 3]>,
    /// `ln φ` of the last iterate; `φ` itself underflows on long runs.
    pub ln_phi_final: f64,
    pub visits: [u64; 6],
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub f: f64,
    pub x0: [f64; 3],
    /// Error token such as `zero_parameter` on failure.
    pub outcome: Result<RunSummary, &'static str>,
}

impl SweepRow {
    pub fn to_csv(&self) -> String {
        let mut fields: Vec<String> = [self.a, self.b, self.c, self.f]
            .iter()
            .chain(self.x0.iter())
            .map(|v| format_number(*v))
            .collect();
        match &self.outcome {
            Ok(s) => {
                fields.push(s.regime.to_string());
                match s.limit {
                    Some(l) => fields.extend(l.iter().map(|v| format_number(*v))),
                    None => fields.extend(["none".to_string(), "none".into(), "none".into()]),
                }
                fields.push(format_number(s.ln_phi_final));
                fields.extend(s.visits.iter().map(|v| v.to_string()));
                fields.push("ok".into());
            }
            Err(token) => {
                fields.extend(std::iter::repeat_n(String::new(), 11));
                fields.push(format!("error:{token}"));
            }
        }
        fields.join(",")
    }
}

fn error_token(e: &DynamicsError) -> &'static str {
    match e {
        DynamicsError::ZeroParameter { .. } => "zero_parameter",
        DynamicsError::ParameterOutOfRange { .. } => "parameter_out_of_range",
        DynamicsError::InvalidSpeed(_) => "invalid_speed",
        _ => "numeric",
    }
}

fn sweep_starts(cfg: &RunConfig) -> Vec<[f64; 3]> {
    let spec = &cfg.sweep;
    let mut starts = spec.starts.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..spec.random_starts {
        // normalised exponentials are uniform on the simplex
        let e: [f64; 3] = std::array::from_fn(|_| -(1.0 - rng.gen::<f64>()).ln());
        let s = e[0] + e[1] + e[2];
        starts.push(e.map(|v| v / s));
    }
    if starts.is_empty() {
        starts.push(cfg.x0);
    }
    starts
}

fn run_one(cfg: &RunConfig, a: f64, b: f64, c: f64, f: f64, x0: [f64; 3]) -> SweepRow {
    let outcome = (|| {
        let params = Parameters::new(a, b, c).map_err(|e| error_token(&e))?;
        let speed = SpeedFunction::constant(f).map_err(|e| error_token(&e))?;
        let start = SimplexPoint::from_array(x0).map_err(|_| "invalid_start")?;
        let window = cfg.analysis.convergence_window.max(2);
        let mut recent: VecDeque<SimplexPoint> = VecDeque::with_capacity(window);
        let mut visits = [0u64; 6];
        let mut last = start;
        for item in Orbit::new(start, params, speed, cfg.log_domain).take(cfg.steps as usize + 1) {
            let (n, p) = item.map_err(|e| error_token(&e))?;
            check_point(&p, n).map_err(|_| "numeric")?;
            visits[sector(&p, &params) as usize] += 1;
            if recent.len() == window {
                recent.pop_front();
            }
            recent.push_back(p);
            last = p;
        }
        let converged = recent.len() == window && window_diameter(recent.iter()) <= cfg.analysis.convergence_tol;
        Ok(RunSummary {
            regime: classify_regime(&params).regime,
            limit: converged.then(|| last.coords()),
            ln_phi_final: ln_phi(&last, &params),
            visits,
        })
    })();
    SweepRow { a, b, c, f, x0, outcome }
}

/// Pool size: `threads` (default: all cores), capped by `SIMPLEXFLOW_THREADS`.
pub fn worker_count(cfg: &RunConfig) -> usize {
    let want = cfg
        .threads
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let cap = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&n| n > 0);
    cap.map_or(want, |c| want.min(c)).max(1)
}

/// All runs of the grid in lexicographic order `(a, b, c, f, start)`.
pub fn sweep_rows(cfg: &RunConfig) -> Result<Vec<SweepRow>, CliError> {
    let spec = &cfg.sweep;
    let starts = sweep_starts(cfg);
    let dims = [
        spec.a_values.len(),
        spec.b_values.len(),
        spec.c_values.len(),
        spec.f_values.len(),
        starts.len(),
    ];
    let total = dims.iter().try_fold(1usize, |acc, &d| acc.checked_mul(d));
    let total = match total {
        Some(t) if t <= spec.max_runs => t,
        _ => {
            return Err(CliError::Config(format!(
                "grid has more than the allowed {} runs",
                spec.max_runs
            )))
        }
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(worker_count(cfg))
        .build()
        .map_err(|e| CliError::Io(format!("worker pool: {e}")))?;
    let rows = pool.install(|| {
        (0..total)
            .into_par_iter()
            .map(|idx| {
                let mut rest = idx;
                let mut pos = [0usize; 5];
                for d in (0..5).rev() {
                    pos[d] = rest % dims[d];
                    rest /= dims[d];
                }
                run_one(
                    cfg,
                    spec.a_values[pos[0]],
                    spec.b_values[pos[1]],
                    spec.c_values[pos[2]],
                    spec.f_values[pos[3]],
                    starts[pos[4]],
                )
            })
            .collect::<Vec<_>>()
    });
    Ok(rows)
}

pub fn sweep_to(cfg: &RunConfig, w: &mut dyn Write) -> Result<Vec<SweepRow>, CliError> {
    let rows = sweep_rows(cfg)?;
    write_sweep(&rows, w)?;
    Ok(rows)
}

fn write_sweep(rows: &[SweepRow], w: &mut dyn Write) -> Result<(), CliError> {
    writeln!(w, "{SWEEP_HEADER}")?;
    for row in rows {
        writeln!(w, "{}", row.to_csv())?;
    }
    Ok(())
}

pub fn cmd_sweep(cfg: &RunConfig) -> Result<(), CliError> {
    let rows = sweep_rows(cfg)?;
    let mut w = open_output(cfg)?;
    write_sweep(&rows, &mut w)?;
    finish(w)
}

// ---------------------------------------------------------------- ode-compare

impl From<OdeError> for CliError {
    fn from(e: OdeError) -> Self {
        match e {
            OdeError::Dynamics(d) => d.into(),
            OdeError::ReferenceUnavailable { .. } => CliError::Numeric(e.to_string()),
            _ => CliError::Config(e.to_string()),
        }
    }
}

pub fn ode_compare_report(cfg: &RunConfig) -> Result<serde_json::Value, CliError> {
    let run = cfg.resolve()?;
    let study = convergence_study(run.x0, &run.params, &run.speed, &cfg.ode.n_list, cfg.ode.horizon)?;
    if study.errors.iter().any(|(_, e)| !e.is_finite()) {
        return Err(CliError::Numeric("non-finite endpoint error".into()));
    }
    let errors: Vec<_> = study.errors.iter().map(|(n, e)| json!({"n": n, "error": e})).collect();
    Ok(json!({
        "config": to_json_value(cfg)?,
        "horizon": study.horizon,
        "reference_step": study.reference_step,
        "errors": errors,
        "slope": match study.order {
            Some(s) => json!(s),
            None => json!("degenerate"),
        },
    }))
}

pub fn cmd_ode_compare(cfg: &RunConfig) -> Result<(), CliError> {
    let report = ode_compare_report(cfg)?;
    let mut w = open_output(cfg)?;
    serde_json::to_writer_pretty(&mut w, &report).map_err(|e| CliError::Io(e.to_string()))?;
    writeln!(w)?;
    finish(w)
}
