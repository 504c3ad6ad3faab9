//! One function per subcommand. Each returns the text written to the output.

use std::path::Path;

use gelfond_core::blossom::{
    blossom_from_coefficients, blossom_from_net, control_points, de_casteljau, BlossomArgument,
    ControlNet,
};
use gelfond_core::curves::{c1_join, GelfondBezierCurve, JoinSpec};
use gelfond_core::dimelev::{
    convergence_report, corner_cutting_step, insert_exponent, CornerCuttingState, ExponentSource,
};
use gelfond_core::gelfond_basis::{
    complete_basis, complete_exponents, elementary_basis, elementary_exponents, gelfond_basis_dd,
    gelfond_basis_schur, hook_basis, hook_exponents, GelfondBasis,
};
use gelfond_core::partitions::ExponentSequence;
use gelfond_core::points::{dist, Point};
use serde_json::{json, Value};

use crate::config::{
    self, exponents, parse_tail, ClosedForm, CurveRecord, Format, Number, RunConfig,
};
use crate::error::{CliError, Result};
use crate::format::{csv_table, number, Figure, PALETTE};

/// Control polygon used by `elevate` when none is given.
pub const REFERENCE_POLYGON: [[f64; 2]; 4] = [[0.0, 0.0], [0.2, 0.6], [0.8, 0.6], [1.0, 0.0]];

const SVG_SAMPLES: usize = 400;

fn json_text(v: &Value) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn uniform(samples: usize) -> impl Iterator<Item = f64> {
    (0..samples).map(move |i| i as f64 / (samples - 1) as f64)
}

fn require_plane(points: &[Point]) -> Result<()> {
    match points.iter().find(|p| p.len() != 2) {
        Some(p) => Err(CliError::input(format!("SVG output needs 2-D points, got dimension {}", p.len()))),
        None => Ok(()),
    }
}

fn curve_from(exps: &[Number], points: Vec<Point>, interval: (f64, f64)) -> Result<GelfondBezierCurve> {
    let net = ControlNet::new(exponents(exps)?, points)?;
    Ok(GelfondBezierCurve::on_interval(net, interval.0, interval.1)?)
}

fn primary_curve(cfg: &RunConfig) -> Result<GelfondBezierCurve> {
    curve_from(cfg.exponent_list()?, cfg.point_list()?, cfg.interval_values()?)
}

fn polyline(curve: &GelfondBezierCurve, samples: usize) -> Result<Vec<Point>> {
    Ok(curve.sample(samples - 1)?.into_iter().map(|(_, p)| p).collect())
}

/// Table of `t, H₀(t), …, Hₙ(t)` and the unity residual `ΣHₖ(t) − 1`.
pub fn cmd_basis(cfg: &RunConfig) -> Result<String> {
    if cfg.format.is_some_and(|f| f != Format::Csv) {
        return Err(CliError::input("basis writes CSV only"));
    }
    let samples = cfg.samples_or(101)?;
    let need = |v: Option<usize>, name: &str| {
        v.ok_or_else(|| CliError::input(format!("--closed-form needs --{name}")))
    };
    type Eval = Box<dyn Fn(usize, f64) -> gelfond_core::Result<f64>>;
    let (order, eval): (usize, Eval) = match cfg.closed_form {
        Some(kind) => {
            let (l, n) = (need(cfg.l, "l")?, need(cfg.n, "n")?);
            match kind {
                ClosedForm::Elementary => {
                    elementary_exponents(l, n)?;
                    (n, Box::new(move |k, t| elementary_basis(l, n, k, t)))
                }
                ClosedForm::Complete => {
                    complete_exponents(l, n)?;
                    (n, Box::new(move |k, t| complete_basis(l, n, k, t)))
                }
                ClosedForm::Hook => {
                    let m = need(cfg.m, "m")?;
                    hook_exponents(l, m, n)?;
                    (n, Box::new(move |k, t| hook_basis(l, m, n, k, t)))
                }
            }
        }
        None => {
            let basis = GelfondBasis::new(exponents(cfg.exponent_list()?)?);
            (basis.order(), Box::new(move |k, t| basis.value(k, t)))
        }
    };
    let mut header = vec!["t".to_string()];
    header.extend((0..=order).map(|k| format!("H{k}")));
    header.push("unity_residual".into());
    let mut rows = Vec::with_capacity(samples);
    for t in uniform(samples) {
        let values = (0..=order).map(|k| eval(k, t)).collect::<gelfond_core::Result<Vec<_>>>()?;
        let residual = values.iter().sum::<f64>() - 1.0;
        let mut row = vec![number(t)];
        row.extend(values.iter().map(|&v| number(v)));
        row.push(number(residual));
        rows.push(row);
    }
    csv_table(&header, &rows)
}

/// Samples one curve per exponent list, all sharing the control points.
pub fn cmd_curve(cfg: &RunConfig) -> Result<String> {
    let samples = cfg.samples_or(201)?;
    let points = cfg.point_list()?;
    let interval = cfg.interval_values()?;
    let mut lists = vec![cfg.exponent_list()?.to_vec()];
    lists.extend(cfg.compare.iter().cloned());
    let curves = lists
        .iter()
        .map(|l| curve_from(l, points.clone(), interval))
        .collect::<Result<Vec<_>>>()?;
    match cfg.format.unwrap_or(Format::Csv) {
        Format::Csv => {
            let dim = curves[0].net().dimension();
            let mut header = vec!["curve".to_string(), "t".to_string()];
            header.extend((0..dim).map(|i| format!("x{i}")));
            let mut rows = Vec::new();
            for (c, curve) in curves.iter().enumerate() {
                for (t, p) in curve.sample(samples - 1)? {
                    let mut row = vec![c.to_string(), number(t)];
                    row.extend(p.iter().map(|&x| number(x)));
                    rows.push(row);
                }
            }
            csv_table(&header, &rows)
        }
        Format::Svg => {
            require_plane(&points)?;
            let mut fig = Figure::new();
            fig.polygon(points.clone());
            for (c, curve) in curves.iter().enumerate() {
                fig.curve(polyline(curve, samples.max(SVG_SAMPLES))?, PALETTE[c % PALETTE.len()]);
            }
            Ok(fig.render())
        }
        Format::Json => {
            let out = curves
                .iter()
                .zip(&lists)
                .map(|(curve, l)| {
                    let s = curve.sample(samples - 1)?;
                    Ok(json!({
                        "exponents": l,
                        "interval": [interval.0, interval.1],
                        "t": s.iter().map(|(t, _)| *t).collect::<Vec<_>>(),
                        "values": s.iter().map(|(_, p)| p.clone()).collect::<Vec<_>>(),
                    }))
                })
                .collect::<Result<Vec<_>>>()?;
            json_text(&json!({ "curves": out }))
        }
    }
}

/// Full de Casteljau triangle at `t` as JSON.
pub fn cmd_decasteljau(cfg: &RunConfig) -> Result<String> {
    if cfg.format.is_some_and(|f| f != Format::Json) {
        return Err(CliError::input("decasteljau writes JSON only"));
    }
    let curve = primary_curve(cfg)?;
    let t = cfg.t.ok_or_else(|| CliError::input("missing --t"))?;
    let trace = de_casteljau(curve.net(), curve.local(t)?)?;
    json_text(&json!({
        "t": t,
        "local": curve.local(t)?,
        "value": trace.value(),
        "levels": trace.levels,
        "weights": trace.weights,
        "max_weight_excursion": trace.max_weight_excursion(),
        "convex": trace.is_convex(),
    }))
}

fn elevation_source(cfg: &RunConfig) -> Result<ExponentSource> {
    match (cfg.preset, &cfg.tail) {
        (Some(_), Some(_)) => Err(CliError::input("give either --preset or --tail, not both")),
        (Some(p), None) => Ok(p.source()),
        (None, Some(tail)) => Ok(ExponentSource::new(exponents(cfg.exponent_list()?)?, parse_tail(tail)?)),
        (None, None) => Err(CliError::input("elevate needs --preset or --exponents with --tail")),
    }
}

fn elevation_frame(target: &[Point], initial: &[Point], polygon: &[Point]) -> String {
    let mut fig = Figure::new();
    fig.polygon(initial.to_vec());
    fig.curve(target.to_vec(), PALETTE[0]);
    fig.polygon_colored(polygon.to_vec(), PALETTE[1]);
    fig.render()
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

/// Corner cutting by repeated exponent insertion, with distances to the limit curve.
pub fn cmd_elevate(cfg: &RunConfig) -> Result<String> {
    let source = elevation_source(cfg)?;
    let polygon = match &cfg.points {
        Some(p) => config::points(p)?,
        None => REFERENCE_POLYGON.iter().map(|p| p.to_vec()).collect(),
    };
    let iterations = cfg.iterations.unwrap_or(100);
    let format = cfg.format.unwrap_or(Format::Csv);
    if format == Format::Svg || cfg.frames.is_some() {
        require_plane(&polygon)?;
    }
    let report = convergence_report(&source, polygon.clone(), iterations)?;
    let mut state = CornerCuttingState::new(source.clone(), polygon.clone())?;
    let target = polyline(&state.target(&polygon)?, SVG_SAMPLES)?;
    if let Some(dir) = &cfg.frames {
        std::fs::create_dir_all(dir)
            .map_err(|source| CliError::Io { path: dir.display().to_string(), source })?;
        loop {
            let name = dir.join(format!("frame_{:04}.svg", state.iteration()));
            write_file(&name, &elevation_frame(&target, &polygon, state.polygon()))?;
            if state.iteration() == iterations {
                break;
            }
            state = corner_cutting_step(&state)?;
        }
    }
    match format {
        Format::Csv => {
            let header: Vec<String> = ["iteration", "polygon_size", "hausdorff", "sup_param_distance"]
                .map(String::from)
                .to_vec();
            let rows: Vec<Vec<String>> = report
                .rows
                .iter()
                .map(|r| {
                    vec![
                        r.iteration.to_string(),
                        r.polygon_size.to_string(),
                        number(r.hausdorff),
                        number(r.sup_param_distance),
                    ]
                })
                .collect();
            csv_table(&header, &rows)
        }
        Format::Json => json_text(&json!({
            "diameter": report.diameter,
            "rows": report.rows.iter().map(|r| json!({
                "iteration": r.iteration,
                "polygon_size": r.polygon_size,
                "hausdorff": r.hausdorff,
                "sup_param_distance": r.sup_param_distance,
            })).collect::<Vec<_>>(),
            "final_polygon": report.final_polygon,
        })),
        Format::Svg => Ok(elevation_frame(&target, &polygon, &report.final_polygon)),
    }
}

/// Inserts one exponent into a curve and writes the enlarged curve record.
pub fn cmd_insert(cfg: &RunConfig) -> Result<String> {
    if cfg.format.is_some_and(|f| f != Format::Json) {
        return Err(CliError::input("insert writes JSON only"));
    }
    let curve = primary_curve(cfg)?;
    let rho = cfg.rho.clone().ok_or_else(|| CliError::input("missing --rho"))?;
    let net = insert_exponent(curve.net(), rho.value()?)?;
    let (_, index) = curve.exponents().insert(rho.value()?)?;
    let mut exps = cfg.exponent_list()?.to_vec();
    exps.insert(index, rho);
    let record = CurveRecord::from_values(exps, curve.interval(), net.points());
    json_text(&serde_json::to_value(record)?)
}

/// First two control points of a C¹ continuation on `[b, c]`.
pub fn cmd_join(cfg: &RunConfig) -> Result<String> {
    let left = primary_curve(cfg)?;
    let right_list = cfg
        .right_exponents
        .as_deref()
        .ok_or_else(|| CliError::input("missing --right-exponents"))?;
    let right_exponents = exponents(right_list)?;
    let right_interval = match &cfg.right_interval {
        Some(iv) => config::interval(Some(iv))?,
        None => {
            let (a, b) = left.interval();
            (b, 2.0 * b - a)
        }
    };
    let spec = JoinSpec { right_exponents: right_exponents.clone(), right_interval };
    let joint = c1_join(&left, &spec)?;
    let right = match &cfg.right_points {
        Some(rest) => {
            let mut pts = vec![joint.q0.clone(), joint.q1.clone()];
            pts.extend(config::points(rest)?);
            Some(curve_from(right_list, pts, right_interval)?)
        }
        None => None,
    };
    match cfg.format.unwrap_or(Format::Json) {
        Format::Json => {
            let record = right.as_ref().map(|r| {
                CurveRecord::from_values(right_list.to_vec(), right_interval, r.points())
            });
            json_text(&json!({ "q0": joint.q0, "q1": joint.q1, "right": record }))
        }
        Format::Svg => {
            let right = right.ok_or_else(|| CliError::input("SVG join output needs --right-points"))?;
            require_plane(left.points())?;
            require_plane(right.points())?;
            let mut fig = Figure::new();
            fig.polygon(left.points().to_vec());
            fig.polygon(right.points().to_vec());
            fig.curve(polyline(&left, SVG_SAMPLES)?, PALETTE[0]);
            fig.curve(polyline(&right, SVG_SAMPLES)?, PALETTE[1]);
            Ok(fig.render())
        }
        Format::Csv => Err(CliError::input("join writes JSON or SVG")),
    }
}

/// Largest deviation between independent routes for the same quantity.
pub struct Comparison {
    pub name: &'static str,
    pub deviation: f64,
}

fn sample_points(n: usize) -> Vec<Point> {
    (0..=n)
        .map(|k| {
            let s = k as f64 / n.max(1) as f64;
            vec![s, if k % 2 == 0 { s * s } else { 1.0 - s }]
        })
        .collect()
}

fn max_over(values: impl IntoIterator<Item = Result<f64>>) -> Result<f64> {
    values.into_iter().try_fold(0.0f64, |acc, v| Ok(acc.max(v?)))
}

pub fn oracle_comparisons(lam: &ExponentSequence, points: Vec<Point>, samples: usize) -> Result<Vec<Comparison>> {
    let n = lam.order();
    let basis = GelfondBasis::new(lam.clone());
    let grid: Vec<f64> = uniform(samples).collect();
    let mut out = Vec::new();

    let unity = max_over(grid.iter().map(|&t| Ok(basis.evaluate(t)?.unity_residual().abs())))?;
    out.push(Comparison { name: "unity_residual", deviation: unity });

    let dd_vs_schur = max_over(grid.iter().flat_map(|&t| {
        (0..=n).map(move |k| Ok((gelfond_basis_dd(lam, k, t)? - gelfond_basis_schur(lam, k, t)?).abs()))
    }))?;
    out.push(Comparison { name: "divided_difference_vs_schur", deviation: dd_vs_schur });

    if basis.factored(0).is_some() {
        let dev = max_over(grid.iter().flat_map(|&t| {
            let basis = &basis;
            (0..=n).map(move |k| Ok((basis.value(k, t)? - gelfond_basis_dd(lam, k, t)?).abs()))
        }))?;
        out.push(Comparison { name: "exact_factored_vs_divided_difference", deviation: dev });
    }

    let curve = GelfondBezierCurve::new(ControlNet::new(lam.clone(), points)?);
    let dc = max_over(
        grid.iter()
            .map(|&t| Ok(dist(&curve.evaluate(t)?, &curve.evaluate_de_casteljau(t)?))),
    )?;
    out.push(Comparison { name: "de_casteljau_vs_basis_sum", deviation: dc });

    let coeffs: Vec<f64> = (0..=n).map(|k| if k % 2 == 0 { 1.0 } else { -0.5 } / (k + 1) as f64).collect();
    let net = ControlNet::new(lam.clone(), control_points(lam, &coeffs)?.into_iter().map(|c| vec![c]).collect())?;
    let args = (0..=n).flat_map(|zeros| {
        let tail: Vec<f64> = (0..n - zeros).map(|i| 0.3 + 0.6 * ((i * 7 + zeros * 3) % 5) as f64 / 4.0).collect();
        [BlossomArgument::new(zeros, tail)]
    });
    let blossom = max_over(args.map(|arg| {
        let arg = arg?;
        Ok((blossom_from_net(&net, &arg)?[0] - blossom_from_coefficients(lam, &coeffs, &arg)?).abs())
    }))?;
    out.push(Comparison { name: "blossom_closed_form_vs_recursion", deviation: blossom });

    if n >= 1 && lam.r(1) >= 1.0 {
        let hodograph = curve.derivative_curve()?;
        let h = 1e-3;
        let fd = max_over(grid.iter().filter(|&&t| (0.05..=0.95).contains(&t)).map(|&t| {
            let p = |s: f64| curve.evaluate(s);
            let (a, b, c, d) = (p(t - 2.0 * h)?, p(t - h)?, p(t + h)?, p(t + 2.0 * h)?);
            let exact = hodograph.evaluate(t)?;
            let approx: Point = (0..exact.len())
                .map(|i| (a[i] - 8.0 * b[i] + 8.0 * c[i] - d[i]) / (12.0 * h))
                .collect();
            let scale = exact.iter().map(|x| x.abs()).fold(1.0f64, f64::max);
            Ok(dist(&exact, &approx) / scale)
        }))?;
        out.push(Comparison { name: "hodograph_vs_finite_difference", deviation: fd });
    }
    Ok(out)
}

/// Runs the cross-route comparisons and lists the largest deviations.
pub fn cmd_oracle(cfg: &RunConfig) -> Result<String> {
    let lam = exponents(cfg.exponent_list()?)?;
    let points = match &cfg.points {
        Some(p) => config::points(p)?,
        None => sample_points(lam.order()),
    };
    let tolerance = cfg.tolerance.unwrap_or(1e-8);
    let results = oracle_comparisons(&lam, points, cfg.samples_or(101)?)?;
    match cfg.format.unwrap_or(Format::Csv) {
        Format::Csv => {
            let header = ["comparison", "max_deviation", "within_tolerance"].map(String::from).to_vec();
            let rows: Vec<Vec<String>> = results
                .iter()
                .map(|c| vec![c.name.to_string(), number(c.deviation), (c.deviation <= tolerance).to_string()])
                .collect();
            csv_table(&header, &rows)
        }
        Format::Json => json_text(&json!({
            "tolerance": tolerance,
            "comparisons": results.iter().map(|c| json!({
                "comparison": c.name,
                "max_deviation": c.deviation,
                "within_tolerance": c.deviation <= tolerance,
            })).collect::<Vec<_>>(),
        })),
        Format::Svg => Err(CliError::input("oracle writes CSV or JSON")),
    }
}
