//! Command-line frontend: construct instances, build tensor rings, check
//! hypotheses, classify modules by one or both routes, and run verification
//! campaigns. All input and output is JSON.
//!
//! Exit codes: 0 verified/success, 1 verified-false or counterexample found,
//! 2 unknown or hypotheses unmet, 3 input error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use tenring::campaign::{run_lemma_suite, verify_theorem, CampaignConfig};
use tenring::classify::Tri;
use tenring::constructions::{example_qnak, morita_context_ring, trivial_extension, FactorOrder};
use tenring::formats::{AlgebraDoc, BimoduleDoc, CopairDoc, FieldDoc, Manifest, PairDoc};
use tenring::hypotheses::{hypothesis_report, TheoremVariant};
use tenring::linalg::FieldSpec;
use tenring::tensor_ring::{
    classify_copair, classify_pair, Method, ModuleClass, TensorPowers, TensorRingCtx,
};
use tenring::{Algebra, Bimodule};

#[derive(Parser)]
#[command(
    name = "tr",
    version,
    about = "Tensor rings of nilpotent bimodules: exact construction and Gorenstein classification"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct InstanceArgs {
    /// Algebra document (JSON)
    algebra: PathBuf,
    /// Bimodule document (JSON)
    bimodule: PathBuf,
    /// Cap on the number of tensor powers before giving up on nilpotency
    #[arg(long, default_value_t = 16)]
    cap: usize,
}

#[derive(Args, Clone)]
struct BoundArgs {
    /// Resolution length bound
    #[arg(long = "bound", default_value_t = 32)]
    bound: usize,
    /// Tor/Ext sweep bound for the hypothesis checks
    #[arg(long = "torbound", default_value_t = 16)]
    torbound: usize,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute the nilpotency index and the tensor power dimensions
    Nilpotency {
        #[command(flatten)]
        instance: InstanceArgs,
    },
    /// Build the tensor ring and emit it as an algebra document
    Build {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check the hypotheses of one classification theorem variant
    Hypotheses {
        #[command(flatten)]
        instance: InstanceArgs,
        /// Variant: gp, gi or gf
        #[arg(long)]
        variant: String,
        #[command(flatten)]
        bounds: BoundArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Classify one pair (or, for gi, copair) document
    Classify {
        /// Instance directory (with manifest.json) or manifest path
        instance: PathBuf,
        /// Pair document, or copair document for class gi
        module: PathBuf,
        /// Class: proj, inj, flat, gp, gi or gf
        #[arg(long)]
        class: String,
        /// Route: phi, direct or both
        #[arg(long, default_value = "both")]
        method: String,
        #[arg(long, default_value_t = 16)]
        cap: usize,
        #[command(flatten)]
        bounds: BoundArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Randomized dual-route verification campaign for one variant
    Verify {
        /// Variant: gp, gi or gf
        variant: String,
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Cap on projective generators of sampled modules
        #[arg(long = "max-gen", default_value_t = 3)]
        max_gen: usize,
        #[command(flatten)]
        bounds: BoundArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the structural lemma suite
    Lemmas {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long = "max-gen", default_value_t = 3)]
        max_gen: usize,
        #[command(flatten)]
        bounds: BoundArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Emit a named example instance
    Example {
        #[command(subcommand)]
        which: ExampleCmd,
    },
    /// Trivial extension by a 1-nilpotent bimodule
    Trivext {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Morita context ring with zero context products
    Morita {
        /// Algebra document for the (1,1) corner
        #[arg(long)]
        a: PathBuf,
        /// Algebra document for the (2,2) corner
        #[arg(long)]
        b: PathBuf,
        /// (B, A)-bimodule document for the (2,1) corner
        #[arg(long)]
        u: PathBuf,
        /// (A, B)-bimodule document for the (1,2) corner
        #[arg(long)]
        v: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ExampleCmd {
    /// Cyclic Nakayama algebra kQ/J^h with M = R e_i (x) e_j R
    Qnak {
        #[arg(long, default_value_t = 2)]
        field: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        h: usize,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        /// Factor order: ij (M = R e_i (x) e_j R) or ji
        #[arg(long, default_value = "ij")]
        convention: String,
        /// Output directory for algebra.json, bimodule.json, manifest.json
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write_or_print<T: serde::Serialize>(value: &T, output: Option<&Path>) -> Result<()> {
    let json = serde_json::to_string_pretty(value)?;
    match output {
        Some(p) => {
            if let Some(dir) = p.parent() {
                if !dir.as_os_str().is_empty() {
                    std::fs::create_dir_all(dir)?;
                }
            }
            std::fs::write(p, json + "\n").with_context(|| format!("writing {}", p.display()))?
        }
        None => println!("{json}"),
    }
    Ok(())
}

fn load_algebra(path: &Path) -> Result<Arc<Algebra>> {
    let doc: AlgebraDoc = read_json(path)?;
    Ok(Arc::new(doc.to_algebra().with_context(|| {
        format!("validating algebra {}", path.display())
    })?))
}

fn load_bimodule(path: &Path, left: &Arc<Algebra>, right: &Arc<Algebra>) -> Result<Bimodule> {
    let doc: BimoduleDoc = read_json(path)?;
    doc.to_bimodule(left, right)
        .with_context(|| format!("validating bimodule {}", path.display()))
}

fn load_instance_args(inst: &InstanceArgs) -> Result<(Arc<Algebra>, Bimodule)> {
    let r = load_algebra(&inst.algebra)?;
    let m = load_bimodule(&inst.bimodule, &r, &r)?;
    Ok((r, m))
}

/// Resolve an instance directory (or manifest file) into algebra + bimodule.
fn load_instance_dir(path: &Path) -> Result<(Arc<Algebra>, Bimodule)> {
    let manifest_path = if path.is_dir() {
        path.join("manifest.json")
    } else {
        path.to_path_buf()
    };
    let manifest: Manifest = read_json(&manifest_path)?;
    manifest.validate()?;
    let dir = manifest_path
        .parent()
        .ok_or_else(|| anyhow!("manifest has no parent directory"))?;
    let r = load_algebra(&dir.join(&manifest.algebra))?;
    if r.field().modulus() != manifest.field.p {
        bail!("manifest field does not match the algebra document");
    }
    let m = load_bimodule(&dir.join(&manifest.bimodule), &r, &r)?;
    Ok((r, m))
}

fn exit_for(verdict: Tri) -> ExitCode {
    match verdict {
        Tri::True => ExitCode::SUCCESS,
        Tri::False => ExitCode::from(1),
        Tri::Unknown => ExitCode::from(2),
    }
}

fn run() -> Result<ExitCode> {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Nilpotency { instance } => {
            let (r, m) = load_instance_args(&instance)?;
            match TensorPowers::new(r, m, instance.cap) {
                Ok(tp) => {
                    let dims: Vec<usize> =
                        (0..=tp.nil_index()).map(|i| tp.power_dim(i)).collect();
                    let out = serde_json::json!({
                        "nilIndex": tp.nil_index(),
                        "dims": dims,
                        "ringDim": tp.total_dim(),
                    });
                    println!("{}", serde_json::to_string_pretty(&out)?);
                    Ok(ExitCode::SUCCESS)
                }
                Err(tenring::Error::NotNilpotentWithinCap { cap }) => {
                    eprintln!("not nilpotent within cap {cap}");
                    Ok(ExitCode::from(2))
                }
                Err(e) => Err(e.into()),
            }
        }
        Cmd::Build { instance, output } => {
            let (r, m) = load_instance_args(&instance)?;
            let tp = TensorPowers::new(r, m, instance.cap)?;
            let ring = tenring::tensor_ring::build_tensor_ring(&tp)?;
            write_or_print(&AlgebraDoc::from_algebra(&ring), output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Hypotheses {
            instance,
            variant,
            bounds,
            output,
        } => {
            let variant = TheoremVariant::parse(&variant)
                .ok_or_else(|| anyhow!("unknown variant {variant}; use gp, gi or gf"))?;
            let (r, m) = load_instance_args(&instance)?;
            let tp = TensorPowers::new(r, m, instance.cap)?;
            let report = hypothesis_report(&tp, variant, bounds.torbound, bounds.bound)?;
            let verdict = report.applicable;
            write_or_print(&report, output.as_deref())?;
            Ok(exit_for(verdict))
        }
        Cmd::Classify {
            instance,
            module,
            class,
            method,
            cap,
            bounds,
            output,
        } => {
            let class =
                ModuleClass::parse(&class).ok_or_else(|| anyhow!("unknown class {class}"))?;
            let method = Method::parse(&method)
                .ok_or_else(|| anyhow!("unknown method {method}; use phi, direct or both"))?;
            let (r, m) = load_instance_dir(&instance)?;
            let tp = TensorPowers::new(r, m, cap)?;
            let ctx = TensorRingCtx::new(tp, bounds.bound)?;
            let verdict = if class == ModuleClass::GorensteinInjective {
                let doc: CopairDoc = read_json(&module)?;
                let c = doc.to_copair(&ctx.tp, &ctx.base_op)?;
                let out = classify_copair(&ctx, &c, class, method)?;
                write_or_print(&out, output.as_deref())?;
                out.verdict
            } else {
                let doc: PairDoc = read_json(&module)?;
                let p = doc.to_pair(&ctx.tp)?;
                let out = classify_pair(&ctx, &p, class, method)?;
                write_or_print(&out, output.as_deref())?;
                out.verdict
            };
            Ok(exit_for(verdict))
        }
        Cmd::Verify {
            variant,
            instance,
            samples,
            seed,
            max_gen,
            bounds,
            output,
        } => {
            let variant = TheoremVariant::parse(&variant)
                .ok_or_else(|| anyhow!("unknown variant {variant}; use gp, gi or gf"))?;
            let (r, m) = load_instance_args(&instance)?;
            let tp = TensorPowers::new(r, m, instance.cap)?;
            let ctx = TensorRingCtx::new(tp, bounds.bound)?;
            let cfg = CampaignConfig {
                seed,
                samples,
                max_generators: max_gen,
                max_len: bounds.bound,
                tor_bound: bounds.torbound,
                ..CampaignConfig::default()
            };
            let report = verify_theorem(&ctx, variant, &cfg)?;
            let verdict = report.verdict;
            write_or_print(&report, output.as_deref())?;
            Ok(exit_for(verdict))
        }
        Cmd::Lemmas {
            instance,
            samples,
            seed,
            max_gen,
            bounds,
            output,
        } => {
            let (r, m) = load_instance_args(&instance)?;
            let tp = TensorPowers::new(r, m, instance.cap)?;
            let ctx = TensorRingCtx::new(tp, bounds.bound)?;
            let cfg = CampaignConfig {
                seed,
                samples,
                max_generators: max_gen,
                max_len: bounds.bound,
                tor_bound: bounds.torbound,
                ..CampaignConfig::default()
            };
            let report = run_lemma_suite(&ctx, &cfg)?;
            let verdict = report.verdict;
            write_or_print(&report, output.as_deref())?;
            Ok(exit_for(verdict))
        }
        Cmd::Example { which } => match which {
            ExampleCmd::Qnak {
                field,
                n,
                h,
                i,
                j,
                convention,
                output,
            } => {
                let order = match convention.as_str() {
                    "ij" => FactorOrder::LeftIRightJ,
                    "ji" => FactorOrder::LeftJRightI,
                    other => bail!("unknown convention {other}; use ij or ji"),
                };
                let field = FieldSpec::new(field)?;
                let (r, m) = example_qnak(field, n, h, i, j, order)?;
                let adoc = AlgebraDoc::from_algebra(&r);
                let mdoc = BimoduleDoc::from_bimodule(&m);
                match output {
                    Some(dir) => {
                        std::fs::create_dir_all(&dir)?;
                        write_or_print(&adoc, Some(&dir.join("algebra.json")))?;
                        write_or_print(&mdoc, Some(&dir.join("bimodule.json")))?;
                        let manifest = Manifest {
                            version: "1".into(),
                            field: FieldDoc {
                                p: field.modulus(),
                            },
                            algebra: "algebra.json".into(),
                            bimodule: "bimodule.json".into(),
                        };
                        write_or_print(&manifest, Some(&dir.join("manifest.json")))?;
                    }
                    None => {
                        let out = serde_json::json!({"algebra": adoc, "bimodule": mdoc});
                        println!("{}", serde_json::to_string_pretty(&out)?);
                    }
                }
                Ok(ExitCode::SUCCESS)
            }
        },
        Cmd::Trivext { instance, output } => {
            let (r, m) = load_instance_args(&instance)?;
            let (_, t) = trivial_extension(&r, &m)?;
            write_or_print(&AlgebraDoc::from_algebra(&t), output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Morita {
            a,
            b,
            u,
            v,
            output,
        } => {
            let a = load_algebra(&a)?;
            let b = load_algebra(&b)?;
            let u = load_bimodule(&u, &b, &a)?;
            let v = load_bimodule(&v, &a, &b)?;
            let mr = morita_context_ring(&a, &b, &u, &v)?;
            let cells: Vec<serde_json::Value> = mr
                .cells
                .iter()
                .map(|c| serde_json::json!({"row": c.row, "col": c.col, "index": c.index}))
                .collect();
            let out = serde_json::json!({
                "ring": AlgebraDoc::from_algebra(&mr.ring),
                "cells": cells,
            });
            write_or_print(&out, output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(3)
        }
    }
}
