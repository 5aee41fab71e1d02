use std::path::{Path, PathBuf};

use nodephysics::{
    calibrate_eta_scale, cavity_coupling, equalize_coupling, eta_template, spin_echo_visibility,
    CavityGeometry, MotionalState, SpinEchoConfig,
};
use protosim::{simulate_direct, simulate_repeater, ProtocolConfig, SimMode};
use qmath::{bell_state, concurrence, fidelity, BellLabel, DensityMatrix};
use ratemodel::{
    bound_khat, bound_min_length, bound_perfect, bound_storage_time, chain_fidelity, chain_time,
    efficiency_budget, rkr_direct, rkr_repeater, skr_bound, skr_pipeline, LinkParams, NodeParams,
    NODE_A_BUDGET, NODE_B_BUDGET,
};
use serde::Deserialize;
use serde_json::json;
use tomo::{
    bell_form_search, mc_error_bars, mle_reconstruct, restricted_rotation_fit, MCConfig,
    TomoDataset,
};

use crate::config::RunConfig;
use crate::output::{json_doc, matrix_json, num, write_output};
use crate::{CliError, Format, Mode, Preset};

pub struct Ctx {
    pub cfg: RunConfig,
    pub out: Option<PathBuf>,
    pub seed: u64,
    pub format: Option<Format>,
    pub strict: bool,
}

impl Ctx {
    fn emit(&self, content: &str) -> Result<(), CliError> {
        write_output(self.out.as_deref(), content)
    }
}

fn preset_name(preset: Preset) -> &'static str {
    match preset {
        Preset::Current => "current",
        Preset::Enhanced => "enhanced",
        Preset::Both => "both",
    }
}

fn sweep_lengths(lmin: f64, lmax: f64, step: f64) -> Result<Vec<f64>, CliError> {
    if !(lmin >= 0.0 && lmax >= lmin && step > 0.0) {
        return Err(CliError::Config(
            "require 0 <= lmin <= lmax and step > 0".into(),
        ));
    }
    let n = ((lmax - lmin) / step + 1e-9).floor() as usize;
    Ok((0..=n).map(|i| lmin + i as f64 * step).collect())
}

struct RateRow {
    preset: &'static str,
    l_km: f64,
    eta: f64,
    rkr_direct_hz: f64,
    rkr_repeater_hz: f64,
    skr_hz: f64,
    skr_bound_hz: f64,
    k_cutoff: u32,
}

fn rate_row(name: &'static str, node: &NodeParams, link: &LinkParams) -> Result<RateRow, CliError> {
    let skr = skr_pipeline(node, link);
    let row = RateRow {
        preset: name,
        l_km: link.l_km,
        eta: link.eta(),
        rkr_direct_hz: rkr_direct(node, link),
        rkr_repeater_hz: rkr_repeater(node, link),
        skr_hz: skr.skr_hz,
        skr_bound_hz: skr_bound(link),
        k_cutoff: skr.k_cutoff,
    };
    for v in [row.eta, row.rkr_direct_hz, row.rkr_repeater_hz, row.skr_hz, row.skr_bound_hz] {
        if v.is_nan() {
            return Err(CliError::Numerical(format!("NaN in rate row at L = {} km", link.l_km)));
        }
    }
    Ok(row)
}

pub fn cmd_rates(
    ctx: &Ctx,
    lmin: f64,
    lmax: f64,
    step: f64,
    preset: Preset,
) -> Result<(), CliError> {
    let lengths = sweep_lengths(lmin, lmax, step)?;
    let presets: Vec<(&'static str, NodeParams)> = match preset {
        Preset::Both => {
            if ctx.cfg.node.is_some() {
                return Err(CliError::Config(
                    "--preset both conflicts with a node configured in --config".into(),
                ));
            }
            vec![("current", NodeParams::current()), ("enhanced", NodeParams::enhanced())]
        }
        p => vec![(preset_name(p), ctx.cfg.node(Some(preset_name(p)))?)],
    };
    let mut rows = Vec::new();
    for (name, node) in &presets {
        for &l in &lengths {
            rows.push(rate_row(name, node, &ctx.cfg.link(l))?);
        }
    }
    let both = preset == Preset::Both;
    match ctx.format.unwrap_or(Format::Csv) {
        Format::Csv => {
            let mut text = String::new();
            if both {
                text.push_str("preset,");
            }
            text.push_str(
                "L_km,eta,rkr_direct_hz,rkr_repeater_hz,skr_hz,skr_bound_hz,k_cutoff\n",
            );
            for r in &rows {
                if both {
                    text.push_str(r.preset);
                    text.push(',');
                }
                text.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    num(r.l_km),
                    num(r.eta),
                    num(r.rkr_direct_hz),
                    num(r.rkr_repeater_hz),
                    num(r.skr_hz),
                    num(r.skr_bound_hz),
                    r.k_cutoff
                ));
            }
            ctx.emit(&text)
        }
        Format::Json => {
            let values: Vec<_> = rows
                .iter()
                .map(|r| {
                    json!({
                        "preset": r.preset,
                        "L_km": r.l_km,
                        "eta": r.eta,
                        "rkr_direct_hz": r.rkr_direct_hz,
                        "rkr_repeater_hz": r.rkr_repeater_hz,
                        "skr_hz": r.skr_hz,
                        "skr_bound_hz": r.skr_bound_hz,
                        "k_cutoff": r.k_cutoff,
                    })
                })
                .collect();
            ctx.emit(&json_doc(&json!(values)))
        }
    }
}

pub fn cmd_skr(ctx: &Ctx, l: f64, preset: Preset) -> Result<(), CliError> {
    if preset == Preset::Both {
        return Err(CliError::Config("skr expects a single preset".into()));
    }
    let node = ctx.cfg.node(Some(preset_name(preset)))?;
    let link = ctx.cfg.link(l);
    let skr = skr_pipeline(&node, &link);
    ctx.emit(&json_doc(&json!({
        "preset": preset_name(preset),
        "l_km": l,
        "eta": link.eta(),
        "rkr_hz": skr.rkr_hz,
        "skf": skr.skf,
        "skr_hz": skr.skr_hz,
        "k_cutoff": skr.k_cutoff,
        "skr_bound_hz": skr_bound(&link),
    })))
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_chain(
    ctx: &Ctx,
    levels: u32,
    l0: f64,
    p0: f64,
    t0: f64,
    f0: f64,
    fswap: f64,
    visibility: f64,
) -> Result<(), CliError> {
    for (name, v) in [("p0", p0), ("f0", f0), ("fswap", fswap), ("visibility", visibility)] {
        if !(0.0..=1.0).contains(&v) || (name == "p0" && v == 0.0) {
            return Err(CliError::Config(format!("{name} = {v} out of range")));
        }
    }
    if l0 <= 0.0 || t0 < 0.0 {
        return Err(CliError::Config("require l0 > 0 and t0 >= 0".into()));
    }
    let node = NodeParams { p0_link: p0, t0, ..NodeParams::enhanced() };
    let mut link = ctx.cfg.link(l0);
    link.l0_km = l0;
    ctx.emit(&json_doc(&json!({
        "t_tot_s": chain_time(levels, &node, &link),
        "fidelity": chain_fidelity(levels, f0, fswap, visibility),
    })))
}

pub fn cmd_bounds(ctx: &Ctx, p0: f64, gamma: f64) -> Result<(), CliError> {
    if !(0.0 < p0 && p0 <= 1.0) || gamma <= 0.0 {
        return Err(CliError::Config("require 0 < p0 <= 1 and gamma > 0".into()));
    }
    let node = NodeParams { p0_link: p0, ..NodeParams::current() };
    let mut link = ctx.cfg.link(50.0);
    link.gamma = gamma;
    let perfect = bound_perfect(&node, &link)
        .map(|(sqrt_eta_star, t_bar)| json!({"sqrt_eta_star": sqrt_eta_star, "t_bar_s": t_bar}));
    ctx.emit(&json_doc(&json!({
        "min_length_km": bound_min_length(link.gamma),
        "storage_time_s": bound_storage_time(&node, &link),
        "k_bar": bound_khat(&node),
        "perfect": perfect,
    })))
}

pub fn cmd_simulate(
    ctx: &Ctx,
    trials: u64,
    mode: Mode,
    l: f64,
    from_preset: Option<Preset>,
) -> Result<(), CliError> {
    let sim_mode = match mode {
        Mode::Repeater => SimMode::Repeater,
        Mode::Direct => SimMode::Direct,
    };
    let mut sim = match (&ctx.cfg.sim, from_preset) {
        (Some(_), Some(_)) => {
            return Err(CliError::Config("--from-preset conflicts with a configured sim".into()));
        }
        (Some(sim), None) => sim.clone(),
        (None, Some(p)) => {
            if p == Preset::Both {
                return Err(CliError::Config("simulate expects a single preset".into()));
            }
            ProtocolConfig::from_node_link(
                &ctx.cfg.node(Some(preset_name(p)))?,
                &ctx.cfg.link(l),
                sim_mode,
            )
        }
        (None, None) => ProtocolConfig::default(),
    };
    sim.mode = sim_mode;
    sim.validate().map_err(CliError::Config)?;
    if trials == 0 {
        return Err(CliError::Config("trials must be positive".into()));
    }
    let stats = match sim_mode {
        SimMode::Repeater => simulate_repeater(&sim, trials, ctx.seed),
        SimMode::Direct => simulate_direct(&sim, trials, ctx.seed),
    };
    let value = serde_json::to_value(&stats)
        .map_err(|e| CliError::Numerical(format!("cannot serialize stats: {e}")))?;
    ctx.emit(&json_doc(&value))
}

pub fn cmd_tomo(ctx: &Ctx, input: &Path, resamples: usize) -> Result<(), CliError> {
    let text = std::fs::read_to_string(input)
        .map_err(|e| CliError::Config(format!("cannot read {}: {e}", input.display())))?;
    let data = TomoDataset::from_json(&text)
        .map_err(|e| CliError::Config(format!("invalid dataset: {e}")))?;
    let mut states: Vec<DensityMatrix> = Vec::with_capacity(4);
    let mut outcomes = Vec::with_capacity(4);
    for (idx, &label) in BellLabel::ALL.iter().enumerate() {
        let i = idx + 1; // ion outcomes are 1-indexed
        let probs = data
            .bayes_probabilities(i)
            .map_err(|e| CliError::Numerical(format!("outcome {i}: {e}")))?;
        let weights = data
            .likelihood_weights(i)
            .map_err(|e| CliError::Numerical(format!("outcome {i}: {e}")))?;
        let mle = mle_reconstruct(&probs, &weights);
        let target = bell_state(label);
        let fid = fidelity(&mle.rho, &target)
            .map_err(|e| CliError::Numerical(format!("outcome {i}: {e}")))?;
        let conc = concurrence(&mle.rho)
            .map_err(|e| CliError::Numerical(format!("outcome {i}: {e}")))?;
        let deltas = if resamples > 0 {
            let mc = MCConfig { resamples, seed: ctx.seed, ..MCConfig::default() };
            let statistic = {
                let target = target.clone();
                move |rho: &DensityMatrix| fidelity(rho, &target).unwrap_or(f64::NAN)
            };
            let (_, dm, dp) = mc_error_bars(&data, i, statistic, &mc)
                .map_err(|e| CliError::Numerical(format!("outcome {i}: {e}")))?;
            json!({"minus": dm, "plus": dp})
        } else {
            serde_json::Value::Null
        };
        outcomes.push(json!({
            "outcome": i,
            "rho": matrix_json(mle.rho.matrix()),
            "converged": mle.converged,
            "iterations": mle.iterations,
            "fidelity": fid,
            "concurrence": conc,
            "fidelity_delta": deltas,
        }));
        states.push(mle.rho);
    }
    let states: [DensityMatrix; 4] =
        states.try_into().expect("exactly four conditional states");
    let bell_fit = bell_form_search(&states);
    let restricted = restricted_rotation_fit(&states);
    ctx.emit(&json_doc(&json!({
        "outcomes": outcomes,
        "bell_form": {
            "fidelities": bell_fit.fidelities,
            "objective": bell_fit.objective,
        },
        "restricted": {
            "theta_amem": restricted.theta_amem,
            "theta_bmem": restricted.theta_bmem,
            "fidelities": restricted.fidelities,
            "objective": restricted.objective,
        },
    })))
}

#[derive(Deserialize)]
struct CustomTemps {
    nbar: [f64; 4],
}

pub fn cmd_spinecho(
    ctx: &Ctx,
    temps: &str,
    echoes: usize,
    grid: usize,
    target: f64,
    miscal: f64,
) -> Result<(), CliError> {
    let state = match temps {
        "start" => MotionalState::start_of_loop2(),
        "mid" => MotionalState::mid_loop2(),
        "end" => MotionalState::end_of_loop2(),
        path => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                CliError::Config(format!("temps must be start|mid|end or a JSON file: {e}"))
            })?;
            let custom: CustomTemps = serde_json::from_str(&text)
                .map_err(|e| CliError::Config(format!("invalid temps file: {e}")))?;
            MotionalState::new(custom.nbar)
        }
    };
    let base = SpinEchoConfig { n_echoes: echoes, grid_max: grid, ..SpinEchoConfig::default() };
    let scale = calibrate_eta_scale(&base, target)
        .map_err(|e| CliError::Numerical(e.to_string()))?;
    let eta = eta_template(&state.freqs_mhz, scale);
    let cfg = SpinEchoConfig { miscalibration: miscal, ..base };
    let result = spin_echo_visibility(&state.clone().with_eta(eta), &cfg)
        .map_err(|e| CliError::Numerical(e.to_string()))?;
    ctx.emit(&json_doc(&json!({
        "temps": temps,
        "nbar": state.nbar,
        "eta_scale": scale,
        "eta": eta,
        "n_echoes": echoes,
        "grid_max": grid,
        "miscalibration": miscal,
        "visibility": result.visibility,
        "coverage": result.coverage,
        "coverage_warning": result.coverage_warning,
    })))
}

pub fn cmd_coupling(
    ctx: &Ctx,
    offset_scan: bool,
    zmin: f64,
    zmax: f64,
    step: f64,
) -> Result<(), CliError> {
    let geom = CavityGeometry::default();
    let r = geom.transverse_offset_um();
    let p = geom.projected_separation_nm();
    if !offset_scan {
        let (z_eq, g_eq) = equalize_coupling(&geom).map_err(|e| CliError::Numerical(e.to_string()))?;
        return ctx.emit(&json_doc(&json!({
            "centered": cavity_coupling(0.0, r, &geom),
            "displaced": cavity_coupling(p, r, &geom),
            "equalized": {"offset_nm": z_eq, "coupling": g_eq},
            "projected_separation_nm": p,
            "transverse_offset_um": r,
        })));
    }
    if !(zmax >= zmin && step > 0.0) {
        return Err(CliError::Config("require zmin <= zmax and step > 0".into()));
    }
    let n = ((zmax - zmin) / step + 1e-9).floor() as usize;
    let mut text = String::from("offset_nm,g_ion1,g_ion2\n");
    for i in 0..=n {
        let z = zmin + i as f64 * step;
        text.push_str(&format!(
            "{},{},{}\n",
            num(z),
            num(cavity_coupling(z, r, &geom)),
            num(cavity_coupling(z + p, r, &geom))
        ));
    }
    ctx.emit(&text)
}

pub fn cmd_budget(ctx: &Ctx) -> Result<(), CliError> {
    let (a, sa) = efficiency_budget(&NODE_A_BUDGET).map_err(CliError::Numerical)?;
    let (b, sb) = efficiency_budget(&NODE_B_BUDGET).map_err(CliError::Numerical)?;
    ctx.emit(&json_doc(&json!({
        "node_a": {"efficiency": a, "sigma": sa},
        "node_b": {"efficiency": b, "sigma": sb},
    })))
}
