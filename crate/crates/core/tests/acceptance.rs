//! Acceptance gate: one PASS/FAIL line per criterion.
//!
//! Every expectation here comes from an oracle written in this file, not
//! from the library's own helpers.

use std::collections::{BTreeSet, VecDeque};
use std::f64::consts::PI;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustfft::num_complex::Complex;
use rustfft::FftPlanner;

use somson::bundle::{render_component_image, render_umatrix_image, ImageOptions, MapBundle};
use somson::demo::{techno_demo, two_clusters};
use somson::som::{
    component_plane, fit_map, init_grid, quantization_error, seeded_rng, train_observed, u_matrix,
    GridShape, NodeIndex, SomGrid, TrainingConfig,
};
use somson::sonify::{
    carrier_frequencies, encode_wav, modulation_index, partial_amplitudes, synthesize,
    tremolo_frequency, SonifierParams,
};

type Outcome = Result<String, String>;

struct Criterion {
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() {
    let criteria = [
        Criterion {
            name: "equation golden suite",
            limit: Some(Duration::from_secs(1)),
            run: equations,
        },
        Criterion {
            name: "spectral render check",
            limit: Some(Duration::from_secs(5)),
            run: spectral,
        },
        Criterion {
            name: "fm sideband check",
            limit: Some(Duration::from_secs(5)),
            run: sidebands,
        },
        Criterion {
            name: "tremolo check",
            limit: None,
            run: tremolo,
        },
        Criterion {
            name: "som property suite",
            limit: Some(Duration::from_secs(10)),
            run: som_suite,
        },
        Criterion {
            name: "determinism and round trip",
            limit: None,
            run: determinism,
        },
        Criterion {
            name: "containment and bmu oracle",
            limit: None,
            run: containment,
        },
        Criterion {
            name: "clipping bound",
            limit: None,
            run: clipping,
        },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let took = start.elapsed();
        let outcome = match (outcome, c.limit) {
            (Ok(_), Some(limit)) if took > limit => {
                Err(format!("took {took:.2?}, limit {limit:?}"))
            }
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("PASS  {:<28} {:>9.2?}  {detail}", c.name, took),
            Err(reason) => {
                failed += 1;
                println!("FAIL  {:<28} {:>9.2?}  {reason}", c.name, took);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rel_err(got: f64, want: f64) -> f64 {
    if want == 0.0 {
        got.abs()
    } else {
        ((got - want) / want).abs()
    }
}

// Direct evaluation, written from the formulas with exp/ln only.
mod oracle {
    pub fn carrier(i: usize, x: f64) -> f64 {
        25.0 * ((i as f64 + 4.0 * x / 12.0) * std::f64::consts::LN_2).exp()
    }
    pub fn index(x: f64) -> f64 {
        let ln5 = 5f64.ln();
        0.4 * (2.8 * x * ln5).exp() + 0.6 * x * (2.8 * ln5).exp()
    }
    pub fn amplitude(freq: f64, x: f64) -> f64 {
        let u = 6.66 * (freq.ln() / std::f64::consts::LN_2 / 9.0 - (0.5 + 0.24 * x));
        (-0.5 * u * u).exp()
    }
    pub fn tremolo(x: f64) -> f64 {
        8.0 * x
    }
}

fn equations() -> Outcome {
    let mut worst: f64 = 0.0;
    for k in 0..=100 {
        let x = k as f64 / 100.0;
        let freqs = carrier_frequencies(x).map_err(|e| e.to_string())?;
        for (i, f) in freqs.iter().enumerate() {
            worst = worst.max(rel_err(*f, oracle::carrier(i, x)));
        }
        worst = worst.max(rel_err(
            modulation_index(x).map_err(|e| e.to_string())?,
            oracle::index(x),
        ));
        // Fixed carriers isolate the envelope from the chroma shift.
        let fixed = carrier_frequencies(0.5).unwrap();
        let amps = partial_amplitudes(&fixed, x).map_err(|e| e.to_string())?;
        for (a, f) in amps.iter().zip(&fixed) {
            worst = worst.max(rel_err(*a, oracle::amplitude(*f, x)));
        }
        worst = worst.max(rel_err(
            tremolo_frequency(x).map_err(|e| e.to_string())?,
            oracle::tremolo(x),
        ));
    }
    ensure(worst < 1e-12, || format!("max relative error {worst:e}"))?;

    let base = carrier_frequencies(0.0).unwrap();
    let octaves: Vec<f64> = (0..9).map(|i| 25.0 * f64::from(1u32 << i)).collect();
    ensure(base.to_vec() == octaves, || {
        format!("x_ps=0 carriers {base:?}")
    })?;
    ensure(modulation_index(0.0).unwrap() == 0.4, || {
        "I(0) != 0.4".into()
    })?;
    let top = modulation_index(1.0).unwrap();
    ensure(rel_err(top, 5f64.powf(2.8)) < 1e-15, || {
        format!("I(1) = {top}")
    })?;
    ensure(tremolo_frequency(0.0).unwrap() == 0.0, || {
        "f_am(0) != 0".into()
    })?;
    Ok(format!(
        "2020 values at 101 points, max rel err {worst:.1e}"
    ))
}

const RATE: u32 = 48_000;

fn render(p: [f64; 4], seconds: f64) -> Vec<f64> {
    let params = SonifierParams::new(p[0], p[1], p[2], p[3]).unwrap();
    let frames = (seconds * RATE as f64).round() as usize;
    synthesize(&params, 0, frames, RATE).unwrap().samples
}

fn hann(n: usize) -> Vec<f64> {
    (0..n)
        .map(|k| 0.5 - 0.5 * (2.0 * PI * k as f64 / n as f64).cos())
        .collect()
}

/// Magnitude spectrum of a Hann-windowed signal zero-padded to `size`.
fn spectrum(signal: &[f64], size: usize) -> Vec<f64> {
    let w = hann(signal.len());
    let mut buf: Vec<Complex<f64>> = signal
        .iter()
        .zip(&w)
        .map(|(s, w)| Complex::new(s * w, 0.0))
        .chain(std::iter::repeat(Complex::new(0.0, 0.0)))
        .take(size)
        .collect();
    FftPlanner::new().plan_fft_forward(size).process(&mut buf);
    buf[..size / 2].iter().map(|c| c.norm()).collect()
}

/// Amplitude of the sinusoid at exactly `freq` Hz, Hann-windowed DFT.
fn tone_amplitude(signal: &[f64], freq: f64, rate: f64) -> f64 {
    let w = hann(signal.len());
    let (mut re, mut im, mut sum) = (0.0, 0.0, 0.0);
    for (k, (s, w)) in signal.iter().zip(&w).enumerate() {
        let ph = 2.0 * PI * freq * k as f64 / rate;
        re += s * w * ph.cos();
        im -= s * w * ph.sin();
        sum += w;
    }
    2.0 * (re * re + im * im).sqrt() / sum
}

fn spectral() -> Outcome {
    let (x_ps, x_ph) = (0.5, 0.5);
    let signal = render([x_ps, 0.0, x_ph, 0.0], 2.0);
    let size = 1 << 20;
    let mag = spectrum(&signal, size);
    let bin = RATE as f64 / size as f64;

    let expected: Vec<(f64, f64)> = (0..9)
        .map(|i| {
            let f = oracle::carrier(i, x_ps);
            (f, oracle::amplitude(f, x_ph))
        })
        .collect();
    let mut order: Vec<usize> = (0..9).collect();
    order.sort_by(|&a, &b| expected[b].1.total_cmp(&expected[a].1));
    let top = &order[..5];

    let mut peaks = Vec::new();
    for &i in top {
        let f = expected[i].0;
        let lo = ((f - 3.0) / bin).floor() as usize;
        let hi = ((f + 3.0) / bin).ceil() as usize;
        let k = (lo..=hi)
            .max_by(|&a, &b| mag[a].total_cmp(&mag[b]))
            .unwrap();
        // Parabolic refinement on the log magnitude.
        let (a, b, c) = (mag[k - 1].ln(), mag[k].ln(), mag[k + 1].ln());
        let offset = 0.5 * (a - c) / (a - 2.0 * b + c);
        let peak_f = (k as f64 + offset) * bin;
        ensure((peak_f - f).abs() <= 1.0, || {
            format!("partial {i}: peak at {peak_f:.3} Hz, expected {f:.3} Hz")
        })?;
        peaks.push((i, mag[k]));
    }
    let peak_max = peaks.iter().map(|p| p.1).fold(0.0, f64::max);
    let amp_max = top.iter().map(|&i| expected[i].1).fold(0.0, f64::max);
    let mut worst: f64 = 0.0;
    for &(i, m) in &peaks {
        let e = rel_err(m / peak_max, expected[i].1 / amp_max);
        worst = worst.max(e);
    }
    ensure(worst < 0.05, || {
        format!("relative magnitude error {:.2}%", worst * 100.0)
    })?;
    Ok(format!(
        "partials {top:?} within 1 Hz, magnitude error {:.2}%",
        worst * 100.0
    ))
}

fn sidebands() -> Outcome {
    let (x_ps, x_ph) = (0.5, 0.5);
    let signal = render([x_ps, 0.3, x_ph, 0.0], 2.0);
    let size = 1 << 20;
    let mag = spectrum(&signal, size);
    let bin = RATE as f64 / size as f64;

    let strongest = (0..9)
        .map(|i| oracle::carrier(i, x_ps))
        .max_by(|a, b| oracle::amplitude(*a, x_ph).total_cmp(&oracle::amplitude(*b, x_ph)))
        .unwrap();
    let lo = ((strongest - 300.0).max(1.0) / bin) as usize;
    let hi = ((strongest + 300.0) / bin) as usize;
    let band: Vec<f64> = mag[lo..hi].to_vec();
    let mean = band.iter().sum::<f64>() / band.len() as f64;
    let centered: Vec<f64> = band.iter().map(|m| m - mean).collect();
    let autocorr = |lag: usize| -> f64 {
        centered[..centered.len() - lag]
            .iter()
            .zip(&centered[lag..])
            .map(|(a, b)| a * b)
            .sum()
    };
    let lags = (10.0 / bin) as usize..=(50.0 / bin) as usize;
    let best = lags
        .max_by(|&a, &b| autocorr(a).total_cmp(&autocorr(b)))
        .unwrap();
    let spacing = best as f64 * bin;
    ensure((spacing - 30.0).abs() <= 0.5, || {
        format!("dominant sideband spacing {spacing:.2} Hz around {strongest:.1} Hz")
    })?;

    // Sideband energy is total energy minus the energy at the nine carriers.
    let ratio = |x_cc: f64| {
        let s = render([x_ps, x_cc, x_ph, 0.0], 2.0);
        let total = s.iter().map(|v| v * v).sum::<f64>() / s.len() as f64;
        let carrier: f64 = (0..9)
            .map(|i| tone_amplitude(&s, oracle::carrier(i, x_ps), RATE as f64).powi(2) / 2.0)
            .sum();
        (total - carrier) / carrier
    };
    let (r0, r6) = (ratio(0.0), ratio(0.6));
    ensure(r6 > r0, || format!("ratio {r0:.4} at 0 vs {r6:.4} at 0.6"))?;
    Ok(format!(
        "spacing {spacing:.2} Hz; sideband/carrier {r0:.3} -> {r6:.1}"
    ))
}

/// Sliding RMS over `window` frames, sampled every `hop` frames.
fn rms_envelope(signal: &[f64], window: usize, hop: usize) -> Vec<(usize, f64)> {
    let mut prefix = vec![0.0];
    let mut acc = 0.0;
    for s in signal {
        acc += s * s;
        prefix.push(acc);
    }
    (0..=signal.len() - window)
        .step_by(hop)
        .map(|start| {
            (
                start,
                ((prefix[start + window] - prefix[start]) / window as f64).sqrt(),
            )
        })
        .collect()
}

fn tremolo() -> Outcome {
    // With x_ps = 0 every component of s^2 other than the tremolo sits on a
    // multiple of 5 Hz, which a 200 ms window cancels.
    let window = RATE as usize / 5;
    let hop = RATE as usize / 1000;
    let mut found = Vec::new();
    for (x_b, want) in [(0.25, 2.0), (0.5, 4.0), (1.0, 8.0)] {
        let env: Vec<f64> = rms_envelope(&render([0.0, 0.0, 0.5, x_b], 4.0), window, hop)
            .into_iter()
            .map(|(_, v)| v)
            .collect();
        let mean = env.iter().sum::<f64>() / env.len() as f64;
        let centered: Vec<f64> = env.iter().map(|v| v - mean).collect();
        let size = 1 << 18;
        let mag = spectrum(&centered, size);
        let bin = 1000.0 / size as f64;
        let k = ((0.5 / bin) as usize..=(20.0 / bin) as usize)
            .max_by(|&a, &b| mag[a].total_cmp(&mag[b]))
            .unwrap();
        let peak = k as f64 * bin;
        ensure((peak - want).abs() <= 0.1, || {
            format!("x_b={x_b}: envelope peak {peak:.3} Hz, expected {want} Hz")
        })?;
        found.push(format!("{peak:.2}"));
    }

    let env = rms_envelope(&render([0.0, 0.0, 0.5, 0.0], 4.0), window, hop);
    let steady: Vec<f64> = env
        .into_iter()
        .filter(|(start, _)| *start >= RATE as usize / 20)
        .map(|(_, v)| v)
        .collect();
    let (lo, hi) = steady
        .iter()
        .fold((f64::MAX, f64::MIN), |(lo, hi), v| (lo.min(*v), hi.max(*v)));
    let spread = (hi - lo) / lo;
    ensure(spread <= 1e-3, || {
        format!("x_b=0 envelope varies {:.4}%", spread * 100.0)
    })?;
    Ok(format!(
        "peaks {} Hz; x_b=0 flat to {:.1e}",
        found.join("/"),
        spread
    ))
}

fn connected(nodes: &BTreeSet<NodeIndex>) -> bool {
    let Some(&first) = nodes.iter().next() else {
        return true;
    };
    let mut seen = BTreeSet::from([first]);
    let mut queue = VecDeque::from([first]);
    while let Some(n) = queue.pop_front() {
        for dr in -1i64..=1 {
            for dc in -1i64..=1 {
                let (r, c) = (n.row as i64 + dr, n.col as i64 + dc);
                if r < 0 || c < 0 {
                    continue;
                }
                let m = NodeIndex::new(r as usize, c as usize);
                if nodes.contains(&m) && seen.insert(m) {
                    queue.push_back(m);
                }
            }
        }
    }
    seen.len() == nodes.len()
}

fn brute_bmu(grid: &SomGrid, x: &[f64]) -> NodeIndex {
    let shape = grid.shape();
    let mut best = (f64::INFINITY, NodeIndex::new(0, 0));
    for r in 0..shape.rows {
        for c in 0..shape.cols {
            let node = NodeIndex::new(r, c);
            let p = grid.pointer_at(node).unwrap();
            let d: f64 = p.iter().zip(x).map(|(a, b)| (a - b) * (a - b)).sum();
            if d < best.0 {
                best = (d, node);
            }
        }
    }
    best.1
}

/// Lattice path between two nodes, one king move per step.
fn lattice_path(a: NodeIndex, b: NodeIndex) -> Vec<NodeIndex> {
    let steps = a.row.abs_diff(b.row).max(a.col.abs_diff(b.col));
    (0..=steps)
        .map(|s| {
            let t = if steps == 0 {
                0.0
            } else {
                s as f64 / steps as f64
            };
            let lerp = |p: usize, q: usize| (p as f64 + (q as f64 - p as f64) * t).round() as usize;
            NodeIndex::new(lerp(a.row, b.row), lerp(a.col, b.col))
        })
        .collect()
}

fn som_suite() -> Outcome {
    let table = two_clusters(8, 7, 1.0, 2024);
    let shape = GridShape::new(16, 16).unwrap();
    let config = TrainingConfig::for_shape(shape).with_seed(2024);
    if config.rounds != 2000 {
        return Err(format!("default rounds {}", config.rounds));
    }
    let fitted = fit_map(&table.items, shape, &config).map_err(|e| e.to_string())?;
    let grid = &fitted.grid;
    let cluster_of: Vec<usize> = table
        .items
        .iter()
        .map(|i| usize::from(i.label != "red"))
        .collect();

    // (a) Each node belongs to the cluster of its nearest item in pointer space.
    let mut regions = [BTreeSet::new(), BTreeSet::new()];
    for r in 0..shape.rows {
        for c in 0..shape.cols {
            let node = NodeIndex::new(r, c);
            let p = grid.pointer_at(node).unwrap();
            let nearest = fitted
                .data
                .iter()
                .enumerate()
                .min_by(|a, b| {
                    let da: f64 = a.1.iter().zip(p).map(|(x, y)| (x - y).powi(2)).sum();
                    let db: f64 = b.1.iter().zip(p).map(|(x, y)| (x - y).powi(2)).sum();
                    da.total_cmp(&db)
                })
                .unwrap()
                .0;
            regions[cluster_of[nearest]].insert(node);
        }
    }
    let mut bmus = [BTreeSet::new(), BTreeSet::new()];
    for (x, &c) in fitted.data.iter().zip(&cluster_of) {
        bmus[c].insert(brute_bmu(grid, x));
    }
    ensure(bmus[0].is_disjoint(&bmus[1]), || {
        "cluster BMU sets overlap".into()
    })?;
    for c in 0..2 {
        ensure(bmus[c].is_subset(&regions[c]), || {
            format!("cluster {c} BMU outside its region")
        })?;
        ensure(connected(&regions[c]), || {
            format!("cluster {c} region is not connected")
        })?;
    }

    // (b) U along the path between centroid nodes versus U at the items.
    let u = u_matrix(grid);
    let centroid = |c: usize| {
        let rows: Vec<&Vec<f64>> = fitted
            .data
            .iter()
            .zip(&cluster_of)
            .filter(|(_, &k)| k == c)
            .map(|(x, _)| x)
            .collect();
        let mean: Vec<f64> = (0..4)
            .map(|f| rows.iter().map(|x| x[f]).sum::<f64>() / rows.len() as f64)
            .collect();
        brute_bmu(grid, &mean)
    };
    let path = lattice_path(centroid(0), centroid(1));
    let path_u = path.iter().map(|n| u.get(*n)).sum::<f64>() / path.len() as f64;
    let item_nodes: Vec<NodeIndex> = fitted.data.iter().map(|x| brute_bmu(grid, x)).collect();
    let within_u = item_nodes.iter().map(|n| u.get(*n)).sum::<f64>() / item_nodes.len() as f64;
    ensure(path_u >= 2.0 * within_u, || {
        format!("path U {path_u:.4} < 2 x within-cluster U {within_u:.4}")
    })?;

    // (c) Quantization error against the untrained grid.
    let qe0 = quantization_error(&fitted.initial, &fitted.data).unwrap();
    let qe1 = quantization_error(grid, &fitted.data).unwrap();
    ensure(qe1 <= 0.2 * qe0, || {
        format!("QE {qe1:.4} vs initial {qe0:.4}")
    })?;
    Ok(format!(
        "regions {}+{} nodes; path U/within U {:.2}; QE {:.4} -> {:.4}",
        regions[0].len(),
        regions[1].len(),
        path_u / within_u,
        qe0,
        qe1
    ))
}

fn artifacts(seed: u64) -> Result<Vec<Vec<u8>>, String> {
    let err = |e: somson::Error| e.to_string();
    let table = techno_demo();
    let shape = GridShape::new(16, 16).unwrap();
    let config = TrainingConfig::for_shape(shape).with_seed(seed);
    let fitted = fit_map(&table.items, shape, &config).map_err(err)?;
    let bundle = MapBundle::build(
        &fitted.grid,
        &table.items,
        &table.names,
        &fitted.normalizer,
        &config,
    )
    .map_err(err)?;
    let json = bundle.to_json().map_err(err)?;

    let back = MapBundle::from_json(&json).map_err(err)?;
    ensure(back == bundle, || "import(export(bundle)) differs".into())?;
    ensure(back.to_json().map_err(err)? == json, || {
        "re-export differs".into()
    })?;

    let opts = ImageOptions {
        show_items: true,
        ..ImageOptions::default()
    };
    let grid = back.grid().map_err(err)?;
    let umat = render_umatrix_image(&back.umatrix(), &back.markers(), &opts).map_err(err)?;
    let plane = component_plane(&grid, 3).map_err(err)?;
    let comp = render_component_image(&plane, &back.markers(), &opts).map_err(err)?;
    let p = back.pointer(NodeIndex::new(3, 5)).map_err(err)?;
    let params = SonifierParams::from_slice(p).map_err(err)?;
    let wav =
        encode_wav(&synthesize(&params, 0, RATE as usize / 2, RATE).map_err(err)?).map_err(err)?;
    Ok(vec![
        json.into_bytes(),
        umat.encode_png().map_err(err)?,
        comp.encode_png().map_err(err)?,
        wav,
    ])
}

fn determinism() -> Outcome {
    let a = artifacts(42)?;
    let b = artifacts(42)?;
    for (name, (x, y)) in ["bundle", "u-matrix png", "component png", "wav"]
        .iter()
        .zip(a.iter().zip(&b))
    {
        ensure(x == y, || format!("{name} differs between runs"))?;
    }
    let c = artifacts(43)?;
    ensure(a[0] != c[0], || "seed has no effect on the bundle".into())?;
    let sizes: Vec<String> = a.iter().map(|v| v.len().to_string()).collect();
    Ok(format!(
        "bundle/png/png/wav identical ({} bytes), lossless round trip",
        sizes.join("/")
    ))
}

fn containment() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut ties = 0;
    for q in 0..10_000 {
        let shape = GridShape::new(rng.random_range(2..=8), rng.random_range(2..=8)).unwrap();
        let dim = rng.random_range(1..=4);
        // Coarse value levels make equidistant nodes common.
        let levels = rng.random_range(2..=5) as f64 - 1.0;
        let pointers: Vec<Vec<f64>> = (0..shape.len())
            .map(|_| {
                (0..dim)
                    .map(|_| rng.random_range(0..=levels as u32) as f64 / levels)
                    .collect()
            })
            .collect();
        let grid = SomGrid::from_pointers(shape, &pointers).map_err(|e| e.to_string())?;
        let x: Vec<f64> = (0..dim)
            .map(|_| rng.random_range(0..=levels as u32) as f64 / levels)
            .collect();
        let got = grid.find_bmu(&x).map_err(|e| e.to_string())?.0;
        let want = brute_bmu(&grid, &x);
        ensure(got == want, || {
            format!("query {q}: got {got:?}, exhaustive scan {want:?}")
        })?;
        let d = |p: &[f64]| -> f64 { p.iter().zip(&x).map(|(a, b)| (a - b) * (a - b)).sum() };
        let best = d(grid.pointer_at(want).unwrap());
        if grid.pointers().filter(|p| d(p) == best).count() > 1 {
            ties += 1;
        }
    }
    ensure(ties > 1000, || format!("only {ties} tied queries"))?;

    let mut updates = 0u64;
    let mut escaped = 0u64;
    for seed in 0..6u64 {
        let mut item_rng = ChaCha8Rng::seed_from_u64(seed);
        let shape = GridShape::new(2 + seed as usize, 8 - seed as usize).unwrap();
        let dim = 1 + seed as usize % 4;
        let data: Vec<Vec<f64>> = (0..12)
            .map(|k| {
                (0..dim)
                    .map(|_| match k % 3 {
                        0 => 0.0,
                        1 => 1.0,
                        _ => item_rng.random::<f64>(),
                    })
                    .collect()
            })
            .collect();
        let config = TrainingConfig::for_shape(shape)
            .with_rounds(150)
            .with_seed(seed);
        let mut rng = seeded_rng(seed);
        let grid = init_grid(shape, dim, seed).map_err(|e| e.to_string())?;
        train_observed(grid, &data, &config, &mut rng, |g| {
            updates += 1;
            if g.pointers().flatten().any(|v| !(0.0..=1.0).contains(v)) {
                escaped += 1;
            }
        })
        .map_err(|e| e.to_string())?;
    }
    ensure(escaped == 0, || {
        format!("{escaped} of {updates} updates left [0,1]^D")
    })?;

    Ok(format!(
        "10000 queries match ({ties} with ties); {updates} updates stayed in [0,1]^D"
    ))
}

fn clipping() -> Outcome {
    let levels = [0.0, 0.25, 0.5, 0.75, 1.0];
    let frames = RATE as usize / 2;
    let mut peak: f64 = 0.0;
    for a in levels {
        for b in levels {
            for c in levels {
                for d in levels {
                    let params = SonifierParams::new(a, b, c, d).unwrap();
                    let block = synthesize(&params, 0, frames, RATE).map_err(|e| e.to_string())?;
                    let p = block.samples.iter().fold(0.0f64, |m, s| m.max(s.abs()));
                    ensure(p <= 1.0, || format!("|s| = {p} at ({a}, {b}, {c}, {d})"))?;
                    peak = peak.max(p);
                }
            }
        }
    }
    Ok(format!("625 renders, max |sample| {peak:.4}"))
}
