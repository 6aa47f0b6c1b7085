//! One function per subcommand; each returns the payload text and a JSON summary.

use std::time::{Instant, SystemTime, UNIX_EPOCH};

use nhent_core::band::{band_energy, Band, Boundary, ModelParams};
use nhent_core::entanglement::{
    remove_exceptional, restrict, single_particle_es, ESpectrum, PairKind, Region,
};
use nhent_core::scaling::{
    classify_model, conformal_tower, fit_central_charge, profile_from_correlation, run_point,
    sweep_points, EntropyProfile, FitResult, FitWindow, SweepPoint, SweepSpec,
};
use nhent_core::spin::{
    biorthogonal_ground, ed_entropy_profile, tfim_bdg_bloch, tfim_entropy_profile, toy_qubit,
    toy_two_qubit, yang_lee_c_eff, YangLeeParams, YangLeeSector,
};
use nhent_core::state::{add_quasiparticle, correlation, fill_ground, grid, OccupationSet};
use nhent_core::C64;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::config::{BandKind, Model, RunConfig, ToyKind};
use crate::format::{cx, num, Table};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::Subcommand)]
pub enum Command {
    /// Band energies on the momentum grid.
    Dispersion,
    /// S(l) for every leading block.
    Entropy,
    /// Central-charge fit of S(l).
    Fit,
    /// Scaling dimensions from the many-body spectrum.
    Tower,
    /// Parameter sweep of the field model, one JSON line per point.
    Sweep,
    /// Spectrum kind, entropy class, Ind and edge modes of a λ-family chain.
    Classify,
    /// Entanglement spectra of the ground, quasiparticle and hole-at-SEP states.
    EsProbe,
    /// Spin-chain analyses: TFIM fit, Yang–Lee PT line, toy qubits.
    Spin,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Dispersion => "dispersion",
            Command::Entropy => "entropy",
            Command::Fit => "fit",
            Command::Tower => "tower",
            Command::Sweep => "sweep",
            Command::Classify => "classify",
            Command::EsProbe => "es-probe",
            Command::Spin => "spin",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub payload: String,
    pub summary: Value,
}

pub fn run(cmd: Command, cfg: &RunConfig) -> Result<Output, CliError> {
    match cmd {
        Command::Dispersion => dispersion(cfg),
        Command::Entropy => entropy(cfg),
        Command::Fit => fit(cfg),
        Command::Tower => tower(cfg),
        Command::Sweep => sweep(cfg),
        Command::Classify => classify(cfg),
        Command::EsProbe => es_probe(cfg),
        Command::Spin => spin(cfg),
    }
}

fn unsupported(cmd: &str, cfg: &RunConfig) -> CliError {
    let family = serde_json::to_value(&cfg.model)
        .ok()
        .and_then(|v| v["family"].as_str().map(str::to_owned))
        .unwrap_or_default();
    CliError::ConfigInvalid(format!("`{cmd}` does not support the {family} model"))
}

fn band_model(cmd: &str, cfg: &RunConfig) -> Result<ModelParams, CliError> {
    cfg.band_params().ok_or_else(|| unsupported(cmd, cfg))
}

fn periodic_boundary(cfg: &RunConfig) -> Result<Boundary, CliError> {
    match cfg.boundary() {
        Boundary::Obc => Err(CliError::ConfigInvalid(
            "this command needs boundary pbc or apbc".into(),
        )),
        b => Ok(b),
    }
}

fn dispersion(cfg: &RunConfig) -> Result<Output, CliError> {
    let mut t = Table::new(&["k", "re_upper", "im_upper", "re_lower", "im_lower"]);
    if let Some(p) = cfg.band_params() {
        let bc = match cfg.boundary() {
            Boundary::Obc => Boundary::Pbc,
            b => b,
        };
        for &k in &grid(cfg.cells, bc, cfg.delta_kappa)?.ks {
            t.row([
                num(k),
                cx(band_energy(&p, k, Band::Upper)),
                cx(band_energy(&p, k, Band::Lower)),
            ]);
        }
    } else if let Some(p) = cfg.tfim() {
        for &k in &grid(cfg.cells, Boundary::Apbc, cfg.delta_kappa)?.ks {
            let m = tfim_bdg_bloch(k, &p);
            let e = (m[0][0] * m[0][0] + m[0][1] * m[1][0]).sqrt();
            t.row([num(k), cx(e), cx(-e)]);
        }
    } else {
        return Err(unsupported("dispersion", cfg));
    }
    Ok(Output {
        payload: t.into_string(),
        summary: json!({ "points": cfg.cells }),
    })
}

fn profile(cmd: &str, cfg: &RunConfig) -> Result<EntropyProfile, CliError> {
    if let Some(p) = cfg.band_params() {
        let g = grid(cfg.cells, periodic_boundary(cfg)?, cfg.delta_kappa)?;
        let c = correlation(&p, &g, &fill_ground(&p, &g))?;
        return Ok(profile_from_correlation(&c, 1..cfg.cells, cfg.policy())?);
    }
    if let Some(p) = cfg.tfim() {
        return Ok(tfim_entropy_profile(
            &p,
            cfg.cells,
            cfg.delta_kappa,
            cfg.policy(),
        )?);
    }
    if let Model::Yanglee {
        j,
        h,
        kappa: Some(kappa),
    } = cfg.model
    {
        return Ok(ed_entropy_profile(
            &YangLeeParams::new(j, h, kappa, cfg.cells),
            cfg.policy(),
        )?);
    }
    Err(unsupported(cmd, cfg))
}

fn entropy(cfg: &RunConfig) -> Result<Output, CliError> {
    let prof = profile("entropy", cfg)?;
    let mut t = Table::new(&["l", "re_s", "im_s"]);
    for &(l, s) in &prof.samples {
        t.row([l.to_string(), cx(s)]);
    }
    Ok(Output {
        payload: t.into_string(),
        summary: json!({ "samples": prof.samples.len() }),
    })
}

fn default_window(cfg: &RunConfig) -> Option<FitWindow> {
    cfg.window().or(match cfg.model {
        Model::Yanglee { .. } => Some(FitWindow {
            l_min: 2,
            l_max: cfg.cells.saturating_sub(2),
        }),
        _ => None,
    })
}

fn fit_json(f: &FitResult) -> Value {
    json!({
        "c": [f.c.re, f.c.im],
        "gamma": [f.gamma.re, f.gamma.im],
        "intercept": [f.intercept.re, f.intercept.im],
        "residual": f.residual,
        "l_min": f.window.l_min,
        "l_max": f.window.l_max,
    })
}

fn fit(cfg: &RunConfig) -> Result<Output, CliError> {
    let f = fit_central_charge(&profile("fit", cfg)?, default_window(cfg))?;
    let mut t = Table::new(&[
        "c_re",
        "c_im",
        "gamma_re",
        "gamma_im",
        "intercept_re",
        "intercept_im",
        "residual",
        "l_min",
        "l_max",
    ]);
    t.row([
        cx(f.c),
        cx(f.gamma),
        cx(f.intercept),
        num(f.residual),
        f.window.l_min.to_string(),
        f.window.l_max.to_string(),
    ]);
    Ok(Output {
        payload: t.into_string(),
        summary: fit_json(&f),
    })
}

fn tower(cfg: &RunConfig) -> Result<Output, CliError> {
    let p = band_model("tower", cfg)?;
    let r = conformal_tower(&p, cfg.cells, periodic_boundary(cfg)?)?;
    let mut t = Table::new(&["n", "delta"]);
    for (n, d) in r.deltas.iter().enumerate() {
        t.row([n.to_string(), num(*d)]);
    }
    Ok(Output {
        payload: t.into_string(),
        summary: json!({ "e0": [r.e0.re, r.e0.im], "e_t": [r.e_t.re, r.e_t.im] }),
    })
}

fn unix_seconds() -> f64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map_or(0.0, |d| d.as_secs_f64())
}

fn sweep_line(index: usize, pt: &SweepPoint, window: Option<FitWindow>) -> Value {
    let start = Instant::now();
    let result = run_point(pt, window);
    let mut v = json!({
        "index": index,
        "m": pt.m,
        "r_h": pt.r_h,
        "cells": pt.cells,
        "delta_kappa": pt.delta_kappa,
        "zeta": pt.zeta,
        "gap": pt.gap.map(|g| [g.re, g.im]),
    });
    let o = v.as_object_mut().expect("object");
    match result {
        Ok(f) => {
            o.insert("fit".into(), fit_json(&f));
            o.insert("error".into(), Value::Null);
        }
        Err(e) => {
            o.insert("fit".into(), Value::Null);
            o.insert(
                "error".into(),
                json!({ "category": e.category(), "message": e.to_string() }),
            );
        }
    }
    o.insert("elapsed_s".into(), json!(start.elapsed().as_secs_f64()));
    o.insert("finished_unix_s".into(), json!(unix_seconds()));
    v
}

fn sweep(cfg: &RunConfig) -> Result<Output, CliError> {
    let Model::Field { m, r_h, gap } = cfg.model else {
        return Err(unsupported("sweep", cfg));
    };
    let axis = cfg
        .sweep_axis()
        .ok_or_else(|| CliError::ConfigInvalid("`sweep` needs a sweep section".into()))?;
    let spec = SweepSpec {
        m,
        r_h,
        cells: cfg.cells,
        delta_kappa: cfg.delta_kappa,
        axis,
        gap: gap.map(|g| C64::new(g[0], g[1])),
        window: cfg.window(),
    };
    let points = sweep_points(&spec)?;
    // indexed parallel collect keeps input order
    let lines: Vec<Value> = points
        .par_iter()
        .enumerate()
        .map(|(i, pt)| sweep_line(i, pt, spec.window))
        .collect();
    let failed = lines.iter().filter(|l| !l["error"].is_null()).count();
    let mut payload = String::new();
    for l in &lines {
        payload.push_str(&l.to_string());
        payload.push('\n');
    }
    Ok(Output {
        payload,
        summary: json!({ "points": lines.len(), "failed": failed }),
    })
}

fn classify(cfg: &RunConfig) -> Result<Output, CliError> {
    let p = band_model("classify", cfg)?;
    let r = classify_model(&p)?;
    let ind = r.ind.map_or("none".to_string(), |s| format!("{s:+}"));
    let mut t = Table::new(&[
        "spectrum",
        "entropy_class",
        "ind",
        "edge_modes",
        "c40_re",
        "c40_im",
        "c80_re",
        "c80_im",
    ]);
    t.row([
        format!("{:?}", r.spectrum_kind),
        format!("{:?}", r.entropy_class),
        ind.clone(),
        r.edge_modes.len().to_string(),
        cx(r.fitted_c[0]),
        cx(r.fitted_c[1]),
    ]);
    Ok(Output {
        payload: t.into_string(),
        summary: json!({
            "spectrum": format!("{:?}", r.spectrum_kind),
            "entropy_class": format!("{:?}", r.entropy_class),
            "ind": ind,
            "edge_modes": r.edge_modes.iter().map(|e| [e.energy.re, e.energy.im]).collect::<Vec<_>>(),
        }),
    })
}

fn spectrum_rows(t: &mut Table, state: &str, es: &ESpectrum) {
    let mut kind = vec![PairKind::Complex; es.values.len()];
    let mut partner = vec![None; es.values.len()];
    for p in &es.pairs {
        kind[p.first] = p.kind;
        partner[p.first] = p.partner;
        if let Some(q) = p.partner {
            kind[q] = p.kind;
            partner[q] = Some(p.first);
        }
    }
    for (i, &c) in es.values.iter().enumerate() {
        t.row([
            state.to_string(),
            i.to_string(),
            cx(c),
            cx(es.ent_energies[i]),
            format!("{:?}", kind[i]),
            partner[i].map_or("none".to_string(), |q| q.to_string()),
        ]);
    }
}

fn es_probe(cfg: &RunConfig) -> Result<Output, CliError> {
    let p = band_model("es-probe", cfg)?;
    let probe = cfg.probe.unwrap_or_default();
    let l = probe.subsystem.unwrap_or(cfg.cells / 2);
    let index = probe.quasiparticle.unwrap_or(cfg.cells / 4);
    let band = match probe.band {
        BandKind::Lower => Band::Lower,
        BandKind::Upper => Band::Upper,
    };
    let g = grid(cfg.cells, periodic_boundary(cfg)?, cfg.delta_kappa)?;
    let ground = fill_ground(&p, &g);
    let states: [(&str, OccupationSet); 3] = [
        ("ground", ground.clone()),
        ("quasiparticle", add_quasiparticle(&ground, index, band)?),
        ("sep_hole", remove_exceptional(&p, &g, &ground)?),
    ];
    let mut t = Table::new(&[
        "state", "index", "re", "im", "ent_re", "ent_im", "kind", "partner",
    ]);
    let mut entropies = serde_json::Map::new();
    for (name, occ) in &states {
        let c = correlation(&p, &g, occ)?;
        let es = single_particle_es(&restrict(&c, Region::leading(l))?)?;
        let s = es.entropy(cfg.policy()).value;
        entropies.insert((*name).into(), json!([s.re, s.im]));
        spectrum_rows(&mut t, name, &es);
    }
    Ok(Output {
        payload: t.into_string(),
        summary: json!({ "subsystem": l, "entropy": entropies }),
    })
}

fn quantity(t: &mut Table, name: &str, z: C64) {
    t.row([name.to_string(), cx(z)]);
}

fn real(x: f64) -> C64 {
    C64::new(x, 0.0)
}

fn spin(cfg: &RunConfig) -> Result<Output, CliError> {
    let mut t = Table::new(&["quantity", "re", "im"]);
    match &cfg.model {
        Model::Tfim { .. } => {
            let f = fit_central_charge(&profile("spin", cfg)?, cfg.window())?;
            quantity(&mut t, "c", f.c);
            quantity(&mut t, "gamma", f.gamma);
            quantity(&mut t, "intercept", f.intercept);
            quantity(&mut t, "residual", real(f.residual));
        }
        Model::Yanglee {
            j,
            h,
            kappa: Some(kappa),
        } => {
            let sector = YangLeeSector::new(YangLeeParams::new(*j, *h, *kappa, cfg.cells))?;
            let g = biorthogonal_ground(&sector.hamiltonian())?;
            quantity(&mut t, "e0", g.energy);
            let f = fit_central_charge(&profile("spin", cfg)?, default_window(cfg))?;
            quantity(&mut t, "c", f.c);
            quantity(&mut t, "residual", real(f.residual));
        }
        Model::Yanglee { j, h, kappa: None } => {
            let opts = cfg.spin.clone().unwrap_or_default();
            let r = yang_lee_c_eff(*j, *h, opts.line_sites, &opts.fit_sites)?;
            for (n, k) in &r.thresholds {
                quantity(&mut t, &format!("threshold_{n}"), real(*k));
            }
            quantity(&mut t, "kappa_inf", real(r.line.kappa_inf));
            quantity(&mut t, "amplitude", real(r.line.amplitude));
            quantity(&mut t, "exponent", real(r.line.exponent));
            for (n, f) in &r.fits {
                quantity(&mut t, &format!("c_eff_{n}"), f.c);
            }
        }
        Model::Toy {
            kind: ToyKind::Qubit,
            phi,
        } => {
            let a = toy_qubit(*phi)?;
            quantity(&mut t, "eigenvalue_0", a.eigenvalues[0]);
            quantity(&mut t, "eigenvalue_1", a.eigenvalues[1]);
            quantity(&mut t, "binorm", real(a.binorm));
            quantity(&mut t, "coalesced", real(f64::from(u8::from(a.coalesced))));
        }
        Model::Toy {
            kind: ToyKind::TwoQubit,
            phi,
        } => {
            let a = toy_two_qubit(*phi)?;
            for (i, e) in a.eigenvalues.iter().enumerate() {
                quantity(&mut t, &format!("eigenvalue_{i}"), *e);
            }
            quantity(&mut t, "even_binorm", real(a.even.binorm));
            quantity(
                &mut t,
                "even_coalesced",
                real(f64::from(u8::from(a.even.coalesced))),
            );
        }
        _ => return Err(unsupported("spin", cfg)),
    }
    let payload = t.into_string();
    let rows = payload.lines().count() - 1;
    Ok(Output {
        payload,
        summary: json!({ "quantities": rows }),
    })
}
