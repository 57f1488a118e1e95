use std::path::{Path, PathBuf};
use std::time::Instant;

use matmor::convex::{self, SetFunction};
use matmor::io::{self, fixtures, Descriptor};
use matmor::lorentzian::{self, SampleOptions, SampleRegion};
use matmor::morphism::{self, geometric_dual, Dart};
use matmor::rational::{self, Rational};
use matmor::{tutte, Error, HomogeneousPolynomial, MatroidMorphism, Result};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::render;
use crate::{CheckKind, Cli, Command, Condition, Format, TutteKind};

/// Reads input documents and remembers their bytes for the digest.
struct Inputs {
    hasher: Sha256,
    used: bool,
}

impl Inputs {
    fn new() -> Inputs {
        Inputs {
            hasher: Sha256::new(),
            used: false,
        }
    }

    fn read(&mut self, path: &Path) -> Result<Descriptor> {
        let bytes = std::fs::read(path)
            .map_err(|e| Error::InvalidParameter(format!("cannot read {}: {e}", path.display())))?;
        self.hasher.update((bytes.len() as u64).to_le_bytes());
        self.hasher.update(&bytes);
        self.used = true;
        let text = String::from_utf8(bytes)
            .map_err(|_| Error::Schema(format!("{} is not UTF-8", path.display())))?;
        Descriptor::parse(&text)
    }

    fn read_value(&mut self, path: &Path) -> Result<Value> {
        let bytes = std::fs::read(path)
            .map_err(|e| Error::InvalidParameter(format!("cannot read {}: {e}", path.display())))?;
        self.hasher.update((bytes.len() as u64).to_le_bytes());
        self.hasher.update(&bytes);
        self.used = true;
        Ok(serde_json::from_slice(&bytes)?)
    }

    /// Hex SHA-256 of the input files; without files, of the arguments.
    fn digest(mut self, args: &[String]) -> String {
        if !self.used {
            for a in args {
                self.hasher.update((a.len() as u64).to_le_bytes());
                self.hasher.update(a.as_bytes());
            }
        }
        self.hasher
            .finalize()
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect()
    }
}

fn rationals(args: &[String]) -> Result<Vec<Rational>> {
    args.iter().map(|a| rational::parse(a)).collect()
}

fn set_function(inputs: &mut Inputs, path: &Path) -> Result<SetFunction> {
    inputs.read(path)?.into_set_function()
}

/// Runs a command and returns what goes to stdout.
pub fn run(cli: &Cli, argv: &[String]) -> Result<String> {
    let start = Instant::now();
    let echo: Vec<String> = argv.iter().filter(|a| *a != "--timing").cloned().collect();
    let mut inputs = Inputs::new();
    let result = match &cli.command {
        Command::Bvector { morphism, format } => {
            let f = checked_morphism(inputs.read(morphism)?.into_morphism()?)?;
            let b = f.b_vector()?;
            if *format == Format::Tsv {
                let mut out = String::from("k\tb_k\n");
                for (k, x) in b.iter().enumerate() {
                    out.push_str(&format!("{k}\t{x}\n"));
                }
                return Ok(out);
            }
            json!({ "b_vector": b, "n": f.source().ground_size() })
        }
        Command::Tutte { kind } => tutte_command(&mut inputs, kind)?,
        Command::Lorentzian {
            polynomial,
            flag,
            q,
            sample,
            trials,
        } => {
            let (h, names): (HomogeneousPolynomial, fn(usize) -> String) = match (polynomial, flag)
            {
                (Some(path), _) => (
                    HomogeneousPolynomial::from_polynomial(inputs.read(path)?.into_polynomial()?)?,
                    |i| format!("w{i}"),
                ),
                (None, Some(path)) => {
                    let flag = inputs.read(path)?.into_flag()?;
                    (tutte::homogeneous_tutte(&flag, &rationals(q)?)?, |i| {
                        format!("w{i}")
                    })
                }
                (None, None) => unreachable!("clap requires one of them"),
            };
            let mut out = json!({
                "degree": h.degree(),
                "polynomial": render::polynomial(&h, names),
                "verdict": render::lorentzian(&lorentzian::is_lorentzian(&h)?),
            });
            if *sample {
                let opts = SampleOptions {
                    trials: *trials,
                    seed: cli.seed,
                    ..SampleOptions::default()
                };
                out["sampled_log_concavity"] =
                    render::sample(&lorentzian::sampled_log_concavity(&h, &opts));
            }
            out
        }
        Command::Ulc { sequence } => {
            let a = rationals(sequence)?;
            let mut out = render::ulc(&lorentzian::is_ultra_log_concave(&a));
            out["length"] = a.len().into();
            out
        }
        Command::Mnat { set_function: path } => {
            let r = set_function(&mut inputs, path)?;
            json!({
                "mnat": render::mnat(&convex::is_mnat_concave(&r)),
                "submodular": render::submodular(&convex::is_submodular(&r)),
            })
        }
        Command::ProbeLn {
            set_function: path,
            grid,
        } => {
            let r = set_function(&mut inputs, path)?;
            let grid = if grid.is_empty() {
                convex::default_grid()
            } else {
                rationals(grid)?
            };
            render::probe(&convex::probe_ln(&r, &grid)?)
        }
        Command::Limit {
            set_function: path,
            exponents,
            sample,
            trials,
            near_ones,
        } => {
            let r = set_function(&mut inputs, path)?;
            let lim = convex::limit_extraction(&r, exponents)?;
            let mut out =
                json!({ "polynomial": render::polynomial(&lim, |i| format!("w{}", i + 1)) });
            if *sample {
                let region = match near_ones {
                    Some(radius) => SampleRegion::Box {
                        center: vec![1.0; lim.nvars()],
                        radius: *radius,
                    },
                    None => SampleOptions::default().region,
                };
                let opts = SampleOptions {
                    trials: *trials,
                    seed: cli.seed,
                    region,
                    ..SampleOptions::default()
                };
                out["sampled_log_concavity"] =
                    render::sample(&lorentzian::sampled_log_concavity(&lim, &opts));
            }
            out
        }
        Command::Dualize { graph, rotation } => {
            let g = io::graph_from_value(&inputs.read_value(graph)?)?;
            let rot = inputs.read(rotation)?.into_rotation()?;
            let d = geometric_dual(&g, &rot)?;
            let signed = |d: &Dart| {
                let e = d.edge as i64 + 1;
                if d.head {
                    -e
                } else {
                    e
                }
            };
            let faces: Vec<Vec<i64>> = d
                .faces
                .iter()
                .map(|f| f.iter().map(signed).collect())
                .collect();
            json!({
                "faces": faces,
                "face_sizes": d.face_sizes(),
                "euler_characteristic": d.euler_characteristic,
                "genus": d.genus(),
                "dual": io::graph_to_value(&d.dual),
                "dual_bipartite": d.dual.is_bipartite(),
                "dual_girth": d.dual.girth(),
            })
        }
        Command::Check { what } => check_command(&mut inputs, what)?,
        Command::Fixtures { name, out } => return fixtures_command(name.name(), out.as_deref()),
    };
    let mut report = json!({
        "command": echo,
        "inputs_sha256": inputs.digest(&echo),
        "seed": cli.seed,
        "result": result,
    });
    if cli.timing {
        report["timing_ms"] = json!(start.elapsed().as_secs_f64() * 1e3);
    }
    Ok(io::canonical_string(&report))
}

fn checked_morphism(f: MatroidMorphism) -> Result<MatroidMorphism> {
    MatroidMorphism::new(f.source().clone(), f.target().clone(), f.map().to_vec())
}

fn tutte_command(inputs: &mut Inputs, kind: &TutteKind) -> Result<Value> {
    Ok(match kind {
        TutteKind::Multivariate { matroid, q } => {
            let m = inputs.read(matroid)?.into_matroid()?;
            let z = tutte::multivariate_tutte(&m, &rational::parse(q)?)?;
            json!({ "polynomial": render::polynomial(&z, |i| format!("w{}", i + 1)) })
        }
        TutteKind::Lasvergnas { source, quotient } => {
            let m = inputs.read(source)?.into_matroid()?;
            let n = inputs.read(quotient)?.into_matroid()?;
            let t = tutte::lasvergnas_tutte(&m, &n)?;
            json!({
                "polynomial": render::polynomial(t.as_polynomial(), |i| ["x", "y", "z"][i].to_string()),
            })
        }
        TutteKind::Flag { flag, q } => {
            let flag = inputs.read(flag)?.into_flag()?;
            let z = tutte::homogeneous_tutte(&flag, &rationals(q)?)?;
            json!({
                "degree": z.degree(),
                "polynomial": render::polynomial(&z, |i| format!("w{i}")),
            })
        }
    })
}

fn check_command(inputs: &mut Inputs, what: &CheckKind) -> Result<Value> {
    Ok(match what {
        CheckKind::Morphism {
            morphism,
            condition,
        } => {
            let f = inputs.read(morphism)?.into_morphism()?;
            match condition {
                Condition::Covering => render::morphism_verdict(&f.check_covering_pairs()?),
                Condition::Nested => render::morphism_verdict(&f.check_all_nested_pairs()?),
                Condition::Cocircuit => render::morphism_verdict(&f.check_cocircuit_condition()?),
                Condition::Flat => render::morphism_verdict(&f.check_flat_condition()?),
                Condition::All => {
                    let r = f.check_all_conditions()?;
                    json!({
                        "holds": r.is_morphism(),
                        "agree": r.agree(),
                        "rank_inequality": render::morphism_verdict(&r.rank_inequality),
                        "cocircuit": render::morphism_verdict(&r.cocircuits),
                        "flat": render::morphism_verdict(&r.flats),
                    })
                }
            }
        }
        CheckKind::Quotient { source, quotient } => {
            let m = inputs.read(source)?.into_matroid()?;
            let n = inputs.read(quotient)?.into_matroid()?;
            render::morphism_verdict(&morphism::is_quotient(&m, &n)?)
        }
        CheckKind::Flag { flag } => {
            let flag = io::flag_from_value_unchecked(&inputs.read_value(flag)?)?;
            match flag.validate() {
                Ok(()) => json!({ "holds": true, "length": flag.len() }),
                Err(Error::NotAFlag { index, witness }) => json!({
                    "holds": false,
                    "length": flag.len(),
                    "constituent": index + 1,
                    "witness": render::nested_pair(&witness),
                }),
                Err(e) => return Err(e),
            }
        }
        CheckKind::Delta { family } => {
            let (n, sets) = io::delta_family_from_value(&inputs.read_value(family)?)?;
            render::delta(&morphism::check_delta_matroid(n, &sets)?)
        }
    })
}

fn fixtures_command(name: &str, out: Option<&Path>) -> Result<String> {
    let files = fixtures::bundled(name).expect("clap restricts the names");
    let Some(dir) = out else {
        return Ok(files[0].1.to_string());
    };
    std::fs::create_dir_all(dir)
        .map_err(|e| Error::InvalidParameter(format!("cannot create {}: {e}", dir.display())))?;
    let mut written = Vec::new();
    for (file, text) in files {
        let path: PathBuf = dir.join(file);
        std::fs::write(&path, text).map_err(|e| {
            Error::InvalidParameter(format!("cannot write {}: {e}", path.display()))
        })?;
        written.push(path.display().to_string());
    }
    Ok(io::canonical_string(
        &json!({ "fixture": name, "written": written }),
    ))
}
