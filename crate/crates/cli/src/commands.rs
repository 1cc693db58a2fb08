use std::fs::File;
use std::io::{BufWriter, Write};

use vos_edge::eval::{
    compare_detectors, generate_synthetic, pfom, Detector, DetectorConfig, SyntheticSpec,
};
use vos_edge::{load_edge_map, load_image, save_image, with_workers, EdgeMap, Error, PixelVector};

use crate::cli::{CompareArgs, DetectArgs, EvalArgs, SynthArgs, Workers};

fn detector_for(args: &DetectArgs) -> Detector {
    match args.algo.baseline() {
        None => Detector::Vos(args.detector.vos_params()),
        Some(kind) => Detector::Baseline {
            kind,
            threshold: args.detector.threshold,
            canny: args.detector.canny_params(),
        },
    }
}

pub fn detect(args: &DetectArgs, workers: Workers, out: &mut impl Write) -> Result<(), Error> {
    let img = load_image(&args.input)?;
    let detector = detector_for(args);
    let edges = with_workers(workers.threads(), || detector.detect(&img))??;
    save_image(&edges, &args.output)?;
    writeln!(out, "{}", edges.count())?;
    Ok(())
}

pub fn compare(args: &CompareArgs, workers: Workers, out: &mut impl Write) -> Result<(), Error> {
    let img = load_image(&args.input)?;
    let truth = load_edge_map(&args.truth)?;
    let opts = &args.detector;
    let mut configs =
        DetectorConfig::standard_suite(opts.vos_params(), opts.threshold, opts.canny_params());
    if args.include_oracle {
        // Listed first so it also ranks first when a detector ties it.
        configs.insert(
            0,
            DetectorConfig::new("oracle", Detector::Fixed(truth.clone())),
        );
    }
    let table = with_workers(workers.threads(), || {
        compare_detectors(&img, &truth, &configs, args.m)
    })??;

    let is_json = args
        .output
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("json"));
    let mut file = BufWriter::new(File::create(&args.output)?);
    if is_json {
        writeln!(file, "{}", table.to_json()?)?;
    } else {
        table.write_csv(&mut file)?;
    }
    file.flush()?;

    let ranked = table.ranked();
    if args.json {
        let json =
            serde_json::to_string_pretty(&ranked).map_err(|e| Error::Report(e.to_string()))?;
        writeln!(out, "{json}")?;
    } else {
        for (i, row) in ranked.iter().enumerate() {
            writeln!(
                out,
                "{:>2}. {:<10} R = {:.4}  N_I = {}  N_A = {}",
                i + 1,
                row.name,
                row.result.score,
                row.result.n_actual,
                row.result.n_detected
            )?;
        }
    }
    Ok(())
}

pub fn synth(args: &SynthArgs, out: &mut impl Write) -> Result<(), Error> {
    let spec = SyntheticSpec {
        profile: args.profile.into(),
        orientation: args.orientation.into(),
        width: args.width.unwrap_or(args.size),
        height: args.height.unwrap_or(args.size),
        color_a: PixelVector::from(args.color_a),
        color_b: PixelVector::from(args.color_b),
        transition_width: args.transition,
        noise_sigma: args.noise,
        seed: args.seed,
    };
    let (img, truth) = generate_synthetic(&spec)?;
    save_image(&img, &args.output)?;
    save_image(&truth, &args.truth)?;
    writeln!(out, "{}", truth.count())?;
    Ok(())
}

pub fn eval(args: &EvalArgs, out: &mut impl Write) -> Result<(), Error> {
    let detected: EdgeMap = load_edge_map(&args.detected)?;
    let truth = load_edge_map(&args.truth)?;
    let r = pfom(&detected, &truth, args.m)?;
    if args.json {
        let json = serde_json::to_string_pretty(&r).map_err(|e| Error::Report(e.to_string()))?;
        writeln!(out, "{json}")?;
    } else {
        writeln!(out, "R = {}", r.score)?;
        writeln!(out, "N_I = {}", r.n_actual)?;
        writeln!(out, "N_A = {}", r.n_detected)?;
    }
    Ok(())
}
