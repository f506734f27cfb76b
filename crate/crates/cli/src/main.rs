//! `braidconj` — normal forms, conjugacy decisions, centralizers, and
//! subgroup conjugacy with machine-readable certificates.
//!
//! Braid words are whitespace-separated signed generator indices, quoted as
//! one argument (`"1 2 -1"`).  For the realized Artin groups (`typeB`,
//! `affineA`) the inputs are words in the *presentation's* generators and
//! are translated to braids before any computation.
//!
//! Exit codes: 0 = decided TRUE (or the command succeeded), 1 = decided
//! FALSE (or a certificate failed re-verification), 2 = error.

mod cert;

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use braidconj::{
    affine_a_context, affine_c_context, bn_x_context, centralizer_generators, colored_context,
    conjugate_in_braid_group, equals, ib_context, type_b_context, BraidWord, ConjugacyCertificate,
    Error, GroupContext, RealizedGroup, Result,
};

use cert::{Certificate, Checks, SCHEMA_VERSION};

#[derive(Parser)]
#[command(name = "braidconj", version, about = "Braid and Artin group conjugacy toolkit")]
struct Cli {
    /// Emit a JSON certificate instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the left normal form of a braid word.
    Nf {
        #[arg(long)]
        strands: usize,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Decide conjugacy in the full braid group.
    Conj {
        #[arg(long)]
        strands: usize,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Print a generating set of a centralizer.
    Centralizer {
        #[arg(long)]
        strands: usize,
        /// Compute in a named subgroup instead of the full braid group.
        #[arg(long, value_enum)]
        group: Option<GroupKind>,
        /// Fixed strands for Bn-X, comma separated.
        #[arg(long, value_delimiter = ',')]
        x: Vec<usize>,
        /// Puncture count for IBn.
        #[arg(long)]
        punctures: Option<usize>,
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Decide conjugacy in a named subgroup, producing an in-subgroup
    /// conjugator.
    Subconj {
        #[arg(long, value_enum)]
        group: GroupKind,
        /// Fixed strands for Bn-X, comma separated.
        #[arg(long, value_delimiter = ',')]
        x: Vec<usize>,
        /// Puncture count for IBn.
        #[arg(long)]
        punctures: Option<usize>,
        #[arg(long)]
        strands: usize,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Re-check a certificate file independently.
    Verify { cert: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GroupKind {
    /// Braids whose permutation fixes every strand listed in --x.
    #[value(name = "Bn-X")]
    BnX,
    /// The colored (pure) braid group.
    #[value(name = "colored")]
    Colored,
    /// Artin group of type B, realized on strands = rank + 1.
    #[value(name = "typeB")]
    TypeB,
    /// Artin group of affine type A, realized on strands = rank + 1.
    #[value(name = "affineA")]
    AffineA,
    /// Artin group of affine type C, realized on strands = rank + 1.
    #[value(name = "affineC")]
    AffineC,
    /// Braid group of the disc with --punctures punctures.
    #[value(name = "IBn")]
    Ibn,
}

impl GroupKind {
    fn name(self) -> &'static str {
        match self {
            GroupKind::BnX => "Bn-X",
            GroupKind::Colored => "colored",
            GroupKind::TypeB => "typeB",
            GroupKind::AffineA => "affineA",
            GroupKind::AffineC => "affineC",
            GroupKind::Ibn => "IBn",
        }
    }

    fn from_name(name: &str) -> Option<Self> {
        [
            GroupKind::BnX,
            GroupKind::Colored,
            GroupKind::TypeB,
            GroupKind::AffineA,
            GroupKind::AffineC,
            GroupKind::Ibn,
        ]
        .into_iter()
        .find(|k| k.name() == name)
    }
}

/// A group elements can be handed to: either a braid-group context taking
/// braid words directly, or an Artin group taking presentation-generator
/// words.
enum Group {
    Direct(GroupContext),
    Artin(RealizedGroup),
}

impl Group {
    fn context(&self) -> &GroupContext {
        match self {
            Group::Direct(c) => c,
            Group::Artin(r) => r.context(),
        }
    }

    fn element(&self, input: &str) -> Result<BraidWord> {
        match self {
            Group::Direct(c) => BraidWord::parse(c.strands(), input),
            Group::Artin(r) => {
                let letters = input
                    .split_whitespace()
                    .map(|t| {
                        t.parse::<i32>().map_err(|_| Error::Parse {
                            what: "generator word",
                            input: input.to_string(),
                        })
                    })
                    .collect::<Result<Vec<i32>>>()?;
                r.map_word(&letters)
            }
        }
    }
}

fn build_group(
    kind: GroupKind,
    strands: usize,
    x: &[usize],
    punctures: Option<usize>,
) -> Result<Group> {
    match kind {
        GroupKind::BnX => {
            if x.is_empty() {
                return Err(Error::InvalidArgument(
                    "Bn-X needs --x with at least one strand".into(),
                ));
            }
            Ok(Group::Direct(bn_x_context(strands, &x.iter().copied().collect::<BTreeSet<_>>())?))
        }
        GroupKind::Colored => Ok(Group::Direct(colored_context(strands)?)),
        GroupKind::TypeB => {
            if strands < 3 {
                return Err(Error::InvalidArgument(
                    "the type B realization needs at least 3 strands".into(),
                ));
            }
            Ok(Group::Artin(type_b_context(strands - 1)?))
        }
        GroupKind::AffineA => {
            if strands < 4 {
                return Err(Error::InvalidArgument(
                    "the affine A realization needs at least 4 strands".into(),
                ));
            }
            Ok(Group::Artin(affine_a_context(strands - 1)?))
        }
        GroupKind::AffineC => Ok(Group::Direct(affine_c_context(strands)?)),
        GroupKind::Ibn => {
            let m = punctures
                .ok_or_else(|| Error::InvalidArgument("IBn needs --punctures".into()))?;
            Ok(Group::Direct(ib_context(strands, m)?))
        }
    }
}

/// The decided question, for echoing into a certificate.
struct Question {
    group: String,
    strands: usize,
    x: Option<Vec<usize>>,
    punctures: Option<usize>,
    a: String,
    b: String,
}

fn emit_certificate(q: &Question, conjugate: bool, conjugator: Option<String>, checks: &Checks) {
    let cert = Certificate {
        schema: SCHEMA_VERSION,
        group: q.group.clone(),
        strands: q.strands,
        x: q.x.clone(),
        punctures: q.punctures,
        a: q.a.clone(),
        b: q.b.clone(),
        conjugate,
        conjugator,
        checks: checks.clone(),
    };
    println!("{}", serde_json::to_string_pretty(&cert).expect("plain data serializes"));
}

/// Prints the outcome of a conjugacy decision and maps it to an exit code,
/// re-checking any produced conjugator first.
fn finish(
    json: bool,
    q: &Question,
    context: &GroupContext,
    outcome: Option<ConjugacyCertificate>,
) -> Result<ExitCode> {
    match outcome {
        Some(found) => {
            let checks = Checks {
                word_problem: found.verify()?,
                image_in_kprime: context.contains(&found.conjugator)?,
            };
            let conjugator = found.conjugator.to_string();
            if json {
                emit_certificate(q, true, Some(conjugator.clone()), &checks);
            } else {
                println!("TRUE");
                println!("conjugator: {conjugator}");
            }
            if checks.passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!("error: the produced conjugator failed re-verification");
                Ok(ExitCode::from(2))
            }
        }
        None => {
            if json {
                emit_certificate(q, false, None, &Checks { word_problem: true, image_in_kprime: true });
            } else {
                println!("FALSE");
            }
            Ok(ExitCode::from(1))
        }
    }
}

fn verify_certificate(cert: &Certificate) -> Result<ExitCode> {
    if cert.schema != SCHEMA_VERSION {
        return Err(Error::InvalidArgument(format!(
            "unsupported certificate schema {}",
            cert.schema
        )));
    }
    let group = if cert.group == "B" {
        Group::Direct(GroupContext::braid_group(cert.strands)?)
    } else {
        let kind = GroupKind::from_name(&cert.group).ok_or_else(|| {
            Error::InvalidArgument(format!("unknown group {:?} in certificate", cert.group))
        })?;
        build_group(kind, cert.strands, cert.x.as_deref().unwrap_or(&[]), cert.punctures)?
    };
    let a = group.element(&cert.a)?;
    let b = group.element(&cert.b)?;
    if cert.conjugate {
        let Some(h_text) = &cert.conjugator else {
            println!("invalid: conjugate is true but no conjugator is recorded");
            return Ok(ExitCode::from(1));
        };
        let h = BraidWord::parse(cert.strands, h_text)?;
        if !equals(&a.conjugated_by(&h)?, &b)? {
            println!("invalid: the conjugation identity fails");
            return Ok(ExitCode::from(1));
        }
        if !group.context().contains(&h)? {
            println!("invalid: the conjugator leaves the subgroup");
            return Ok(ExitCode::from(1));
        }
        println!("valid");
        Ok(ExitCode::SUCCESS)
    } else {
        // A negative answer carries no witness; re-run the decision.
        if group.context().conjugate(&a, &b)?.is_none() {
            println!("valid");
            Ok(ExitCode::SUCCESS)
        } else {
            println!("invalid: the elements are conjugate after all");
            Ok(ExitCode::from(1))
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Nf { strands, word } => {
            let w = BraidWord::parse(strands, &word)?;
            println!("{}", w.normal_form());
            Ok(ExitCode::SUCCESS)
        }
        Command::Conj { strands, a, b } => {
            let wa = BraidWord::parse(strands, &a)?;
            let wb = BraidWord::parse(strands, &b)?;
            let outcome = conjugate_in_braid_group(&wa, &wb)?;
            let q = Question {
                group: "B".into(),
                strands,
                x: None,
                punctures: None,
                a,
                b,
            };
            finish(cli.json, &q, &GroupContext::braid_group(strands)?, outcome)
        }
        Command::Centralizer { strands, group, x, punctures, a } => {
            let gens = match group {
                None => centralizer_generators(&BraidWord::parse(strands, &a)?),
                Some(kind) => {
                    let grp = build_group(kind, strands, &x, punctures)?;
                    let w = grp.element(&a)?;
                    grp.context().centralizer(&w)?
                }
            };
            for g in &gens {
                println!("{g}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Subconj { group, x, punctures, strands, a, b } => {
            let grp = build_group(group, strands, &x, punctures)?;
            let wa = grp.element(&a)?;
            let wb = grp.element(&b)?;
            let outcome = grp.context().conjugate(&wa, &wb)?;
            let q = Question {
                group: group.name().into(),
                strands,
                x: if group == GroupKind::BnX { Some(x) } else { None },
                punctures: if group == GroupKind::Ibn { punctures } else { None },
                a,
                b,
            };
            finish(cli.json, &q, grp.context(), outcome)
        }
        Command::Verify { cert: path } => {
            let text = std::fs::read_to_string(&path).map_err(|e| {
                Error::InvalidArgument(format!("cannot read {}: {e}", path.display()))
            })?;
            let cert: Certificate = serde_json::from_str(&text).map_err(|e| Error::Parse {
                what: "certificate",
                input: e.to_string(),
            })?;
            verify_certificate(&cert)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
