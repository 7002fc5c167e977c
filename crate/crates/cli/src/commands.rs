use clap::{Parser, Subcommand, ValueEnum};
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use cfext_core::continued_fractions::{self, KSequence, Parity};
use cfext_core::correspondence;
use cfext_core::exact_arith::{Integer, Natural};
use cfext_core::extension_invariants::{
    self as ext, DefectClass, DefectPair, ExtensionDescriptor, IndexPair, QUOTIENT_CAP,
};
use cfext_core::path_category::{counts_by_recurrence, PathOracle, DEFAULT_CAP};

use crate::parse::{self, ParseError};
use crate::record::{num, nums, Format, OutputRecord};

#[derive(Debug, Parser)]
#[command(name = "cfext", version, about = "Rationals in [0,1), continued fractions and extension invariants (n, m)")]
pub struct Cli {
    /// Output rendering.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Largest number of paths the enumeration oracle may build.
    #[arg(long, default_value_t = DEFAULT_CAP, global = true)]
    pub cap: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ParityArg {
    Even,
    Odd,
}

impl From<ParityArg> for Parity {
    fn from(p: ParityArg) -> Parity {
        match p {
            ParityArg::Even => Parity::Even,
            ParityArg::Odd => Parity::Odd,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a continued fraction such as "[1,(0,1)^3]" or "[0;2,2]".
    Eval {
        #[arg(allow_hyphen_values = true)]
        cf: String,
    },
    /// Invariant (n, m) and k-sequence of a rational in [0,1).
    Invariant {
        #[arg(allow_hyphen_values = true)]
        theta: String,
    },
    /// Rational and k-sequence for an invariant (n, m).
    Rational {
        #[arg(long)]
        n: String,
        #[arg(long)]
        m: String,
    },
    /// Compare the path counts from the recurrences with brute-force enumeration.
    Oracle {
        /// k_1,k_2,...
        #[arg(long)]
        k: String,
    },
    /// The group Z^2/(Za + nZ^2) and its brute-force check.
    Group {
        /// a_+,a_-
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long)]
        n: String,
    },
    /// Decide isomorphism of two extensions given as n,a_+,a_-,k_+,k_-.
    Iso {
        #[arg(long, allow_hyphen_values = true)]
        e: String,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
    },
    /// Split an index-(-1,1) extension (n, m) as M_t tensor (p, l).
    Tensor {
        #[arg(long)]
        n: String,
        #[arg(long)]
        m: String,
        #[arg(long)]
        t: String,
    },
    /// Effros-Shen dimension tower of a rational's simple expansion.
    Tower {
        #[arg(allow_hyphen_values = true)]
        theta: String,
        #[arg(long, value_enum, default_value_t = ParityArg::Even)]
        parity: ParityArg,
        /// Number of levels; defaults to the full expansion.
        #[arg(long)]
        depth: Option<usize>,
    },
    /// The two terminal dimension pairs (q_n, q_{n-1}) of a rational in (0,1).
    Candidates {
        #[arg(allow_hyphen_values = true)]
        theta: String,
    },
    /// Interval containing [0,1,k_1,1,k_2,...] for any continuation of a prefix.
    Bounds {
        #[arg(long)]
        k: String,
        /// Defaults to the prefix length.
        #[arg(long)]
        depth: Option<usize>,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error {0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Domain(#[from] cfext_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Parse(_) => 2,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn k_json(k: &KSequence) -> Value {
    match k.to_dense() {
        Ok(entries) => nums(entries),
        Err(_) => Value::Null,
    }
}

fn k_support_json(k: &KSequence) -> Value {
    Value::Array(k.support().iter().map(|(p, v)| json!([num(p), num(v)])).collect())
}

fn class_json(c: &DefectClass) -> Value {
    match c.as_integer() {
        Some(m) => num(m),
        None => json!([num(&c.first), num(&c.second)]),
    }
}

fn descriptor(src: &str) -> Result<ExtensionDescriptor> {
    let [n, a_plus, a_minus, k_plus, k_minus] = parse::parse_int_tuple::<5>(src)?;
    let natural = |v: Integer| -> Result<Natural> {
        v.to_biguint()
            .ok_or_else(|| cfext_core::Error::InvariantOutOfRange {
                n: Natural::zero(),
                m: Natural::zero(),
            })
            .map_err(CliError::from)
    };
    let n = natural(n)?;
    if n.is_zero() {
        return Err(cfext_core::Error::ZeroOrder.into());
    }
    Ok(ExtensionDescriptor::new(
        n,
        IndexPair::new(a_plus, a_minus),
        DefectPair::new(natural(k_plus)?, natural(k_minus)?),
    ))
}

pub fn run(cli: &Cli) -> Result<OutputRecord> {
    match &cli.command {
        Command::Eval { cf } => {
            let cf = parse::parse_cf(cf)?;
            let value = continued_fractions::eval_cf(&cf);
            Ok(OutputRecord::new("eval")
                .input("cf", parse::render_cf(&cf))
                .output("value", value.to_string()))
        }
        Command::Invariant { theta } => {
            let r = parse::parse_rational(theta)?;
            let inv = correspondence::rational_to_invariant(&r)?;
            Ok(OutputRecord::new("invariant")
                .input("theta", num(&r))
                .output("n", num(&inv.n))
                .output("m", num(&inv.m))
                .output("k", k_json(&inv.k))
                .output("h", num(inv.k.h()))
                .output("k_support", k_support_json(&inv.k))
                .output("theta", num(&inv.theta)))
        }
        Command::Rational { n, m } => {
            let (n, m) = (parse::parse_natural(n)?, parse::parse_natural(m)?);
            let k = correspondence::invariant_to_k(&n, &m)?;
            let theta = continued_fractions::k_value(&k);
            Ok(OutputRecord::new("rational")
                .input("n", num(&n))
                .input("m", num(&m))
                .output("theta", num(&theta))
                .output("k", k_json(&k))
                .output("h", num(k.h()))
                .output("k_support", k_support_json(&k)))
        }
        Command::Oracle { k } => oracle(&parse::parse_natural_list(k)?, cli.cap),
        Command::Group { a, n } => {
            let [a_plus, a_minus] = parse::parse_int_tuple::<2>(a)?;
            let a = IndexPair::new(a_plus, a_minus);
            let n = parse::parse_natural(n)?;
            group(&a, &n)
        }
        Command::Iso { e, f } => {
            let (e, f) = (descriptor(e)?, descriptor(f)?);
            let same = ext::is_isomorphic(&e, &f)?;
            let (ce, cf) = (ext::invariant_class(&e)?, ext::invariant_class(&f)?);
            Ok(OutputRecord::new("iso")
                .input("e", descriptor_json(&e))
                .input("f", descriptor_json(&f))
                .output("isomorphic", same)
                .output("index_orbit_e", nums([&ce.index_orbit.plus, &ce.index_orbit.minus]))
                .output("mbar_e", class_json(&ce.mbar))
                .output("index_orbit_f", nums([&cf.index_orbit.plus, &cf.index_orbit.minus]))
                .output("mbar_f", class_json(&cf.mbar)))
        }
        Command::Tensor { n, m, t } => {
            let (n, m, t) = (
                parse::parse_natural(n)?,
                parse::parse_natural(m)?,
                parse::parse_natural(t)?,
            );
            if n.is_zero() {
                return Err(cfext_core::Error::ZeroOrder.into());
            }
            let (p, l) = ext::factor_invariant(&n, &m, &t)?;
            Ok(OutputRecord::new("tensor")
                .input("n", num(&n))
                .input("m", num(&m))
                .input("t", num(&t))
                .output("p", num(p))
                .output("l", num(l)))
        }
        Command::Tower {
            theta,
            parity,
            depth,
        } => {
            let r = parse::parse_rational(theta)?;
            let cf = continued_fractions::expand_simple(&r, (*parity).into())?;
            let depth = depth.unwrap_or(cf.last_index());
            let levels = correspondence::es_tower(&cf, depth)?;
            let dims = levels.iter().map(|l| nums([&l.dims.0, &l.dims.1])).collect();
            let embeddings = levels
                .iter()
                .map(|l| match &l.embedding {
                    Some(t) => json!([nums(&t[0]), nums(&t[1])]),
                    None => Value::Null,
                })
                .collect();
            Ok(OutputRecord::new("tower")
                .input("theta", num(&r))
                .input("parity", format!("{parity:?}").to_lowercase())
                .input("depth", num(depth))
                .output("cf", cf.to_string())
                .output("levels", Value::Array(dims))
                .output("embeddings", Value::Array(embeddings)))
        }
        Command::Candidates { theta } => {
            let r = parse::parse_rational(theta)?;
            let c = correspondence::rational_candidates(&r)?;
            Ok(OutputRecord::new("candidates")
                .input("theta", num(&r))
                .output("even", nums([&c.even.0, &c.even.1]))
                .output("odd", nums([&c.odd.0, &c.odd.1])))
        }
        Command::Bounds { k, depth } => {
            let prefix = parse::parse_natural_list(k)?;
            let depth = depth.unwrap_or(prefix.len());
            let (lo, hi) = continued_fractions::k_value_bounds(&prefix, depth);
            Ok(OutputRecord::new("bounds")
                .input("k", nums(&prefix))
                .input("depth", num(depth))
                .output("lo", num(lo))
                .output("hi", num(hi)))
        }
    }
}

fn descriptor_json(e: &ExtensionDescriptor) -> Value {
    json!({
        "n": num(&e.n),
        "a": nums([&e.a.plus, &e.a.minus]),
        "defects": nums([&e.defects.plus, &e.defects.minus]),
    })
}

fn oracle(entries: &[Natural], cap: u64) -> Result<OutputRecord> {
    let k = KSequence::from_entries(entries.iter().cloned());
    let h = k.h().to_usize().filter(|&h| h <= continued_fractions::DENSE_LIMIT);
    let h = h.ok_or_else(|| cfext_core::Error::TooLong(k.h()))?;
    let counts = counts_by_recurrence(&k, h);
    let defect = counts.phi_sum_below_top();
    let words = PathOracle::with_cap(cap).enumerate_phi(&k, h)?;
    let mut enumerated = vec![0usize; h + 1];
    for w in &words {
        enumerated[w.len()] += 1;
    }
    let enumerated_defect: usize = words.iter().map(|w| h - w.len()).sum();
    let matches = enumerated
        .iter()
        .zip(&counts.psi)
        .all(|(e, p)| Natural::from(*e) == *p)
        && Natural::from(enumerated_defect) == defect;
    Ok(OutputRecord::new("oracle")
        .input("k", nums(entries))
        .output("psi", nums(&counts.psi))
        .output("phi", nums(&counts.phi))
        .output("defect", num(&defect))
        .output("enumerated_counts", nums(&enumerated))
        .output("enumerated_defect", num(enumerated_defect))
        .output("match", matches))
}

fn group(a: &IndexPair, n: &Natural) -> Result<OutputRecord> {
    let d = ext::build_quotient(a, n)?;
    let image = |x: i64, y: i64| {
        let c = d.project(&x.into(), &y.into());
        json!([num(&c.first), num(&c.second)])
    };
    let (oracle_order, oracle_match) = match n.to_u64().filter(|&v| v <= QUOTIENT_CAP) {
        Some(small) => {
            let brute = ext::brute_force_quotient(a, small)?;
            let mut images: Vec<DefectClass> = brute
                .reps
                .iter()
                .map(|&(x, y)| d.project(&Integer::from(x), &Integer::from(y)))
                .collect();
            images.sort();
            images.dedup();
            let bijective =
                images.len() == brute.order() && Natural::from(brute.order()) == d.order();
            (num(brute.order()), Value::Bool(bijective))
        }
        None => (Value::Null, Value::Null),
    };
    let single = d.d.is_one();
    Ok(OutputRecord::new("group")
        .input("a", nums([&a.plus, &a.minus]))
        .input("n", num(n))
        .output("c", num(&d.c))
        .output("d", num(&d.d))
        .output("a_prime", nums([&d.a_prime.plus, &d.a_prime.minus]))
        .output("b", nums([&d.b.plus, &d.b.minus]))
        .output("order", num(d.order()))
        .output("cyclic", single)
        .output(
            "generator_images",
            json!({ "e_plus": image(1, 0), "e_minus": image(0, 1) }),
        )
        .output("oracle_order", oracle_order)
        .output("oracle_match", oracle_match))
}
