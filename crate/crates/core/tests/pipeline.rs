use std::collections::BTreeSet;
use std::path::Path;

use somson::bundle::{
    export_bundle, import_bundle, load_features, render_umatrix_image, ImageOptions, MapBundle,
};
use somson::demo::{techno_demo, two_clusters};
use somson::som::{component_plane, fit_map, GridShape, NodeIndex, TrainingConfig};
use somson::sonify::{render_wav, ModMatrix, RenderSettings, Slot};

fn demo_bundle(rounds: usize) -> MapBundle {
    let csv = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/demo_features.csv");
    let table = load_features(&csv).unwrap();
    let shape = GridShape::new(16, 16).unwrap();
    let config = TrainingConfig::for_shape(shape)
        .with_rounds(rounds)
        .with_seed(5);
    let fitted = fit_map(&table.items, shape, &config).unwrap();
    MapBundle::build(
        &fitted.grid,
        &table.items,
        &table.names,
        &fitted.normalizer,
        &config,
    )
    .unwrap()
}

#[test]
fn demo_file_to_bundle_to_artifacts() {
    let bundle = demo_bundle(300);
    assert_eq!(bundle.items.len(), 15);
    assert_eq!(bundle.feature_names, techno_demo().names);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("map.json");
    export_bundle(&bundle, &path).unwrap();
    let back = import_bundle(&path).unwrap();
    assert_eq!(back, bundle);

    let png = dir.path().join("map.png");
    render_umatrix_image(&back.umatrix(), &back.markers(), &ImageOptions::default())
        .unwrap()
        .save_png(&png)
        .unwrap();
    let decoded = image::open(&png).unwrap().to_rgb8();
    assert_eq!(decoded.dimensions(), (16 * 24, 16 * 24));

    let wav = dir.path().join("node.wav");
    let params = ModMatrix::identity(back.dim())
        .apply(back.pointer(NodeIndex::new(8, 8)).unwrap())
        .unwrap();
    let block = render_wav(&params, 2.0, &RenderSettings::default(), &wav).unwrap();
    assert_eq!(block.frames(), 96_000);
    let reader = hound::WavReader::open(&wav).unwrap();
    assert_eq!(reader.duration(), 96_000);
    assert_eq!(reader.spec().channels, 1);
}

#[test]
fn swapped_routing_makes_pitch_follow_bpm_plane() {
    let bundle = demo_bundle(200);
    let grid = bundle.grid().unwrap();
    let bpm = component_plane(&grid, 3).unwrap();
    let mut m = ModMatrix::identity(4);
    // Fluctuation is still driven by feature 3, so this is rejected unchanged.
    m.set_route(0, Some(Slot::Fluctuation)).unwrap_err();
    assert_eq!(m.routes[0], Some(Slot::Chroma));
    m.set_route(3, None).unwrap();
    m.set_route(0, None).unwrap();
    m.set_route(3, Some(Slot::Chroma)).unwrap();
    m.set_route(0, Some(Slot::Fluctuation)).unwrap();
    assert!(m.set_route(4, None).is_err());
    for i in 0..bundle.shape.len() {
        let node = bundle.shape.node(i);
        let p = m.apply(bundle.pointer(node).unwrap()).unwrap();
        assert_eq!(p.chroma, bpm.get(node));
    }
}

#[test]
fn cluster_boundary_is_lighter_than_cluster_interiors() {
    let table = two_clusters(8, 7, 1.0, 11);
    let shape = GridShape::new(10, 10).unwrap();
    let config = TrainingConfig::for_shape(shape)
        .with_rounds(500)
        .with_seed(11);
    let fitted = fit_map(&table.items, shape, &config).unwrap();
    let bundle = MapBundle::build(
        &fitted.grid,
        &table.items,
        &table.names,
        &fitted.normalizer,
        &config,
    )
    .unwrap();

    // Oracle labels: each node takes the cluster of its nearest item.
    let label = |node: NodeIndex| {
        let p = bundle.pointer(node).unwrap();
        let nearest = bundle
            .items
            .iter()
            .min_by(|a, b| {
                let d = |x: &[f64]| x.iter().zip(p).map(|(u, v)| (u - v).powi(2)).sum::<f64>();
                d(&a.normalized).total_cmp(&d(&b.normalized))
            })
            .unwrap();
        nearest.label.clone()
    };
    let mut boundary = BTreeSet::new();
    for i in 0..shape.len() {
        let node = shape.node(i);
        if shape.neighbors(node).any(|n| label(n) != label(node)) {
            boundary.insert(node);
        }
    }
    assert!(!boundary.is_empty() && boundary.len() < shape.len());

    let img = render_umatrix_image(&bundle.umatrix(), &[], &ImageOptions::default()).unwrap();
    let mean = |inside: bool| {
        let levels: Vec<f64> = (0..shape.len())
            .map(|i| shape.node(i))
            .filter(|n| boundary.contains(n) != inside)
            .map(|n| img.cell_center(n)[0] as f64)
            .collect();
        levels.iter().sum::<f64>() / levels.len() as f64
    };
    let (edge, interior) = (mean(false), mean(true));
    assert!(edge > interior, "boundary {edge} vs interior {interior}");
}
