use std::path::Path;

use somson::bundle::{
    export_bundle, import_bundle, load_features, render_component_image, render_umatrix_image,
    ImageOptions, MapBundle,
};
use somson::som::{
    component_plane, fit_map, quantization_error, GridShape, NodeIndex, TrainingConfig,
};
use somson::sonify::{render_wav, ModMatrix, RenderSettings, SonifierParams};

use crate::{Failure, Node, View};

pub fn train(
    features: &Path,
    rows: usize,
    cols: usize,
    rounds: usize,
    seed: u64,
    out: &Path,
) -> Result<(), Failure> {
    let shape = GridShape::new(rows, cols)?;
    let config = TrainingConfig::for_shape(shape)
        .with_rounds(rounds)
        .with_seed(seed);
    config.validate()?;
    let table = load_features(features)?;
    let fitted = fit_map(&table.items, shape, &config)?;
    let qe = quantization_error(&fitted.grid, &fitted.data)?;
    let bundle = MapBundle::build(
        &fitted.grid,
        &table.items,
        &table.names,
        &fitted.normalizer,
        &config,
    )?;
    export_bundle(&bundle, out)?;
    println!(
        "trained {rows}x{cols} map on {} items, {rounds} rounds, seed {seed}: quantization error {qe:.6}",
        table.items.len()
    );
    Ok(())
}

pub fn plot(
    bundle: &Path,
    view: View,
    show_items: bool,
    cell_size: u32,
    out: &Path,
) -> Result<(), Failure> {
    let bundle = import_bundle(bundle)?;
    let options = ImageOptions {
        cell_size,
        show_items,
        ..ImageOptions::default()
    };
    let image = match view {
        View::UMatrix => render_umatrix_image(&bundle.umatrix(), &bundle.markers(), &options)?,
        View::Component(f) => {
            let plane = component_plane(&bundle.grid()?, f)?;
            render_component_image(&plane, &bundle.markers(), &options)?
        }
    };
    image.save_png(out)?;
    Ok(())
}

pub fn render(
    bundle: Option<&Path>,
    node: Option<Node>,
    params: Option<&[f64]>,
    seconds: f64,
    rate: u32,
    out: &Path,
) -> Result<(), Failure> {
    let bundle = bundle.map(import_bundle).transpose()?;
    let params = match (node, params, &bundle) {
        (Some(node), _, Some(b)) => {
            let pointer = b.pointer(NodeIndex::new(node.row, node.col))?;
            ModMatrix::identity(b.dim()).apply(pointer)?
        }
        (None, Some(values), b) => {
            if let Some(b) = b {
                let expected = ModMatrix::identity(b.dim()).active_slots();
                if values.len() != expected {
                    return Err(Failure::Data(format!(
                        "{} parameters given, the bundle's map sonifies {expected}",
                        values.len()
                    )));
                }
            }
            SonifierParams::from_slice(values)?
        }
        _ => {
            return Err(Failure::Usage(
                "render needs --node with --bundle, or --params".into(),
            ))
        }
    };
    let settings = RenderSettings {
        rate,
        ..RenderSettings::default()
    };
    let block = render_wav(&params, seconds, &settings, out)?;
    println!(
        "rendered {} frames at {rate} Hz, {} channel(s)",
        block.frames(),
        block.channels
    );
    Ok(())
}
