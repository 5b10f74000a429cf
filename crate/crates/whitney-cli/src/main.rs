//! Batch front end: read a graph, run one operation, emit a JSON or CSV
//! report. Reports are self-describing (input hash, parameters, caps,
//! seed) and deterministic apart from the timing field.
//!
//! Exit codes: 0 success, 1 usage or failed table, 2 input parse error,
//! 3 cap exceeded, 4 indeterminate classification.

mod tables;

use std::io::Read;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use whitney::barycentric::{bary_numbers, ds_cubic, ds_quadratic, refine};
use whitney::complex::{f_matrix, f_tensor, whitney, WhitneyComplex};
use whitney::curvature::{
    curvature_linear, curvature_wu, index_expectation_exact, index_expectation_mc, index_linear,
    rational_str, trianglefree_wu_curvature, wu_index, wu_index_matrix, McTarget, VertexField,
};
use whitney::graph::{self, Family, Graph, VertexFunction};
use whitney::product::cartesian;
use whitney::topology::{boundary, classify, inductive_dimension};
use whitney::valuation::{wu, wu_function, wu_intersection, Valuation};
use whitney::{Error, Limits};

#[derive(Parser)]
#[command(
    name = "whitney",
    version,
    about = "Linear and multi-linear valuations on graphs via their Whitney complexes"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,

    /// Input file, or "-" for standard input
    #[arg(long = "in", global = true, default_value = "-")]
    input: String,

    /// Input format; autodetected when omitted (leading '{' means JSON)
    #[arg(long, global = true, value_enum)]
    format: Option<InFormat>,

    /// Report format on standard output (reports default to json;
    /// graph-producing commands print graph6 unless --out json)
    #[arg(long, global = true, value_enum)]
    out: Option<OutFormat>,

    /// Thread cap for internal parallelism (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Simplex-count safety cap
    #[arg(long, global = true, default_value_t = 5_000_000)]
    max_simplices: usize,

    /// Ordered-tuple safety cap
    #[arg(long, global = true, default_value_t = 100_000_000)]
    max_tuples: u64,

    /// Node budget for the topology recognizers
    #[arg(long, global = true, default_value_t = 2_000_000)]
    topo_budget: u64,

    /// Seed for randomized operations
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum InFormat {
    Graph6,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a graph from a family and print it
    Gen {
        /// cycle|path|complete|star|wheel|complete_bipartite|bouquet|
        /// cross_polytope|hypercube|er|kite|house|figure8|cube|
        /// dodecahedron|icosahedron|tesseract|utility
        family: String,
        /// Family parameters (counts; for er: n p)
        params: Vec<String>,
    },
    /// Summary report: f-vector, Euler and Wu characteristics, dimension
    Invariants,
    /// Euler characteristic
    Chi,
    /// Wu characteristic of a given order
    Wu {
        #[arg(long, default_value_t = 2)]
        order: usize,
        /// Report the whole Wu function up to this order instead
        #[arg(long)]
        upto: Option<usize>,
    },
    /// f-vector
    Fvector,
    /// f-matrix of ordered intersecting pair counts
    Fmatrix,
    /// Order-k intersection tensor
    Ftensor {
        #[arg(long, default_value_t = 3)]
        order: usize,
    },
    /// Gauss-Bonnet curvature (linear valuation or Wu order)
    Curvature {
        #[arg(long)]
        valuation: Option<String>,
        #[arg(long)]
        order: Option<usize>,
        /// Use the triangle-free closed form (order 2 only)
        #[arg(long)]
        closed_form: bool,
    },
    /// Poincaré-Hopf index (linear valuation or quadratic Wu)
    Index {
        #[arg(long)]
        valuation: Option<String>,
        #[arg(long)]
        order: Option<usize>,
        /// Vertex function file (JSON array of numbers or "p/q" strings);
        /// default is the identity ordering, or a seeded random ordering
        /// with --random
        #[arg(long)]
        function: Option<String>,
        #[arg(long)]
        random: bool,
        /// Also report the full Wu index matrix
        #[arg(long)]
        matrix: bool,
    },
    /// Index expectation: exact over all orderings, or Monte Carlo
    Expectation {
        #[arg(long, default_value = "euler")]
        valuation: String,
        /// Monte Carlo over wu of this order instead of a linear valuation
        #[arg(long)]
        order: Option<usize>,
        /// Sample count switches to Monte Carlo
        #[arg(long)]
        samples: Option<u64>,
    },
    /// Barycentric refinement; prints the refined graph
    Refine,
    /// Stanley-Reisner product with a second graph
    Product {
        /// File with the second factor
        #[arg(long)]
        with: String,
        /// Include the (simplex, simplex) vertex labels
        #[arg(long)]
        labels: bool,
    },
    /// Dehn-Sommerville and Barycentric vectors, or the characteristic
    /// tables of an input graph
    Ds {
        #[arg(long)]
        k: Option<i64>,
        #[arg(long)]
        c: Option<usize>,
        /// With --k/--c: print the Barycentric eigenvector instead
        #[arg(long)]
        bary: bool,
        /// With an input graph: include the cubic table
        #[arg(long)]
        cubic: bool,
    },
    /// Topological classification
    Classify,
    /// Boundary of a d-graph with boundary; prints the boundary graph
    Boundary,
    /// Inductive dimension
    Dimension,
    /// Intersection number and form of two vertex sets
    Intersect {
        /// Comma-separated vertex list
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Recompute the published tables and compare
    PaperTables {
        /// Table name, or "all"
        #[arg(long, default_value = "all")]
        table: String,
        /// List available table names
        #[arg(long)]
        list: bool,
    },
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h = 0xcbf2_9ce4_8422_2325u64;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100_0000_01b3);
    }
    h
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Graph6 { .. } | Error::JsonGraph(_) => 2,
        Error::CapExceeded { .. } => 3,
        Error::Indeterminate => 4,
        _ => 1,
    }
}

struct Ctx {
    limits: Limits,
    out: Option<OutFormat>,
    seed: u64,
    started: Instant,
}

struct LoadedGraph {
    graph: Graph,
    source: String,
    hash: String,
}

fn read_source(path: &str) -> Result<String, Error> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::InvalidParam(format!("reading standard input: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidParam(format!("reading {path}: {e}")))
    }
}

fn load_graph(path: &str, format: Option<InFormat>) -> Result<LoadedGraph, Error> {
    let text = read_source(path)?;
    let hash = format!("{:016x}", fnv1a(text.as_bytes()));
    let trimmed = text.trim();
    let graph = match format {
        Some(InFormat::Json) => Graph::from_json(trimmed)?,
        Some(InFormat::Graph6) => Graph::from_graph6(trimmed)?,
        None => {
            if trimmed.starts_with('{') {
                Graph::from_json(trimmed)?
            } else {
                Graph::from_graph6(trimmed)?
            }
        }
    };
    Ok(LoadedGraph {
        graph,
        source: path.to_string(),
        hash,
    })
}

fn load_function(path: &str, n: usize) -> Result<VertexFunction, Error> {
    let text = read_source(path)?;
    let vals: Vec<Value> = serde_json::from_str(text.trim())
        .map_err(|e| Error::InvalidParam(format!("vertex function: {e}")))?;
    if vals.len() != n {
        return Err(Error::InvalidParam(format!(
            "vertex function has {} entries, graph has {n} vertices",
            vals.len()
        )));
    }
    let parsed: Result<Vec<BigRational>, Error> = vals
        .iter()
        .map(|v| match v {
            Value::Number(x) if x.is_i64() => {
                Ok(BigRational::from(BigInt::from(x.as_i64().unwrap())))
            }
            Value::String(s) => {
                let mut it = s.splitn(2, '/');
                let p: BigInt = it
                    .next()
                    .unwrap()
                    .parse()
                    .map_err(|_| Error::InvalidParam(format!("bad rational {s:?}")))?;
                let q: BigInt = match it.next() {
                    Some(q) => q
                        .parse()
                        .map_err(|_| Error::InvalidParam(format!("bad rational {s:?}")))?,
                    None => BigInt::from(1),
                };
                Ok(BigRational::new(p, q))
            }
            other => Err(Error::InvalidParam(format!(
                "vertex function entries must be integers or \"p/q\" strings, got {other}"
            ))),
        })
        .collect();
    Ok(VertexFunction::new(parsed?))
}

fn big_str(x: &BigInt) -> Value {
    Value::String(x.to_string())
}

fn matrix_json(m: &[Vec<BigInt>]) -> Value {
    Value::Array(
        m.iter()
            .map(|row| Value::Array(row.iter().map(big_str).collect()))
            .collect(),
    )
}

fn field_json(f: &VertexField) -> Value {
    f.to_json()
}

impl Ctx {
    fn report(&self, input: Option<&LoadedGraph>, op: &str, params: Value, results: Value) {
        let mut doc = serde_json::Map::new();
        doc.insert("tool".into(), json!("whitney"));
        doc.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
        if let Some(g) = input {
            doc.insert(
                "input".into(),
                json!({
                    "source": g.source,
                    "hash": g.hash,
                    "n": g.graph.n(),
                    "edges": g.graph.edge_count(),
                }),
            );
        }
        doc.insert("op".into(), json!(op));
        doc.insert("params".into(), params);
        doc.insert(
            "caps".into(),
            json!({
                "max_simplices": self.limits.max_simplices,
                "max_tuples": self.limits.max_tuples,
            }),
        );
        doc.insert("results".into(), results.clone());
        doc.insert(
            "timing_ms".into(),
            json!(self.started.elapsed().as_secs_f64() * 1e3),
        );
        match self.out.unwrap_or(OutFormat::Json) {
            OutFormat::Json => println!("{}", Value::Object(doc)),
            OutFormat::Csv => {
                let mut rows = Vec::new();
                flatten_csv("", &results, &mut rows);
                for (path, value) in rows {
                    println!("{path},{value}");
                }
            }
        }
    }

    /// Graph-producing commands print the graph itself: a graph6 line for
    /// piping, or the JSON form under --out json.
    fn emit_graph(&self, g: &Graph, extra: Option<Value>) {
        match self.out {
            Some(OutFormat::Json) => {
                let mut v: Value = serde_json::from_str(&g.to_json()).expect("graph json");
                if let (Value::Object(map), Some(Value::Object(e))) = (&mut v, extra) {
                    for (k, val) in e {
                        map.insert(k, val);
                    }
                }
                println!("{v}");
            }
            _ => println!("{}", g.to_graph6()),
        }
    }
}

fn flatten_csv(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                let p = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten_csv(&p, val, out);
            }
        }
        Value::Array(items) => {
            for (i, val) in items.iter().enumerate() {
                flatten_csv(&format!("{prefix}.{i}"), val, out);
            }
        }
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

fn parse_usize(s: &str, what: &str) -> Result<usize, Error> {
    s.parse()
        .map_err(|_| Error::InvalidParam(format!("bad {what}: {s:?}")))
}

fn gen_graph(family: &str, params: &[String], seed: u64) -> Result<Graph, Error> {
    let p = |i: usize, what: &str| -> Result<usize, Error> {
        params
            .get(i)
            .ok_or_else(|| Error::InvalidParam(format!("{family} needs a {what} parameter")))
            .and_then(|s| parse_usize(s, what))
    };
    let fam = match family {
        "cycle" => Family::Cycle(p(0, "length")?),
        "path" => Family::Path(p(0, "length")?),
        "complete" => Family::Complete(p(0, "order")?),
        "star" => Family::Star(p(0, "ray count")?),
        "wheel" => Family::Wheel(p(0, "rim length")?),
        "complete_bipartite" => Family::CompleteBipartite(p(0, "left side")?, p(1, "right side")?),
        "bouquet" => Family::Bouquet {
            circles: p(0, "circle count")?,
            girth: if params.len() > 1 { p(1, "girth")? } else { 4 },
        },
        "cross_polytope" => Family::CrossPolytope(p(0, "dimension")?),
        "hypercube" => Family::Hypercube(p(0, "dimension")?),
        "er" => {
            let n = p(0, "vertex count")?;
            let prob: f64 = params
                .get(1)
                .ok_or_else(|| Error::InvalidParam("er needs a probability".into()))?
                .parse()
                .map_err(|_| Error::InvalidParam("bad probability".into()))?;
            return graph::erdos_renyi(n, prob, seed);
        }
        "kite" => Family::Kite,
        "house" => Family::House,
        "figure8" => Family::Figure8,
        "cube" => Family::Cube,
        "dodecahedron" => Family::Dodecahedron,
        "icosahedron" => Family::Icosahedron,
        "tesseract" => Family::Tesseract,
        "utility" => Family::Utility,
        other => return Err(Error::InvalidParam(format!("unknown family {other:?}"))),
    };
    graph::generate(&fam)
}

fn complex_of(g: &Graph, limits: &Limits) -> Result<WhitneyComplex, Error> {
    whitney(g, None, limits)
}

fn pick_function(
    cmdline: &Option<String>,
    random: bool,
    n: usize,
    seed: u64,
) -> Result<VertexFunction, Error> {
    match cmdline {
        Some(path) => load_function(path, n),
        None if random => {
            let mut rng = whitney::SplitMix64::new(seed);
            Ok(VertexFunction::random_order(n, &mut rng))
        }
        None => Ok(VertexFunction::identity(n)),
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    if let Some(t) = cli.threads {
        if t > 0 {
            rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build_global()
                .map_err(|e| Error::InvalidParam(format!("thread pool: {e}")))?;
        }
    }
    let ctx = Ctx {
        limits: Limits::default()
            .with_max_simplices(cli.max_simplices)
            .with_max_tuples(cli.max_tuples)
            .with_topo_budget(cli.topo_budget),
        out: cli.out,
        seed: cli.seed,
        started: Instant::now(),
    };
    let limits = ctx.limits;

    match cli.cmd {
        Cmd::Gen { family, params } => {
            let g = gen_graph(&family, &params, ctx.seed)?;
            ctx.emit_graph(&g, None);
        }
        Cmd::Invariants => {
            let input = load_graph(&cli.input, cli.format)?;
            let cx = complex_of(&input.graph, &limits)?;
            let results = json!({
                "n": input.graph.n(),
                "edges": input.graph.edge_count(),
                "clique_number": cx.clique_number(),
                "f_vector": cx.f_vector(),
                "chi": cx.euler_characteristic().to_string(),
                "wu": wu(&cx, 2, &limits)?.to_string(),
                "inductive_dimension": rational_str(&inductive_dimension(&input.graph)),
            });
            ctx.report(Some(&input), "invariants", json!({}), results);
        }
        Cmd::Chi => {
            let input = load_graph(&cli.input, cli.format)?;
            let cx = complex_of(&input.graph, &limits)?;
            ctx.report(
                Some(&input),
                "chi",
                json!({}),
                json!({ "chi": cx.euler_characteristic().to_string() }),
            );
        }
        Cmd::Wu { order, upto } => {
            let input = load_graph(&cli.input, cli.format)?;
            let cx = complex_of(&input.graph, &limits)?;
            match upto {
                Some(k) => {
                    let values = wu_function(&cx, k, &limits)?;
                    ctx.report(
                        Some(&input),
                        "wu",
                        json!({ "upto": k }),
                        json!({ "wu_function": values.iter().map(|v| v.to_string()).collect::<Vec<_>>() }),
                    );
                }
                None => {
                    let value = wu(&cx, order, &limits)?;
                    ctx.report(
                        Some(&input),
                        "wu",
                        json!({ "order": order }),
                        json!({ "wu": value.to_string() }),
                    );
                }
            }
        }
        Cmd::Fvector => {
            let input = load_graph(&cli.input, cli.format)?;
            let cx = complex_of(&input.graph, &limits)?;
            ctx.report(
                Some(&input),
                "fvector",
                json!({}),
                json!({ "f_vector": cx.f_vector() }),
            );
        }
        Cmd::Fmatrix => {
            let input = load_graph(&cli.input, cli.format)?;
            let cx = complex_of(&input.graph, &limits)?;
            let m = f_matrix(&cx, &limits)?;
            ctx.report(Some(&input), "fmatrix", json!({}), json!({ "f_matrix": m.to_json() }));
        }
        Cmd::Ftensor { order } => {
            let input = load_graph(&cli.input, cli.format)?;
            let cx = complex_of(&input.graph, &limits)?;
            if order > 4 {
                return Err(Error::InvalidParam(format!(
                    "tensor order {order} above the supported default of 4"
                )));
            }
            let t = f_tensor(&cx, order, &limits)?;
            ctx.report(
                Some(&input),
                "ftensor",
                json!({ "order": order }),
                json!({ "f_tensor": t.to_json() }),
            );
        }
        Cmd::Curvature {
            valuation,
            order,
            closed_form,
        } => {
            let input = load_graph(&cli.input, cli.format)?;
            let g = &input.graph;
            let results;
            let params;
            match (valuation, order) {
                (Some(_), Some(_)) => {
                    return Err(Error::InvalidParam(
                        "pick either --valuation or --order".into(),
                    ))
                }
                (None, Some(k)) if closed_form => {
                    if k != 2 {
                        return Err(Error::InvalidParam(
                            "the closed form is the quadratic one".into(),
                        ));
                    }
                    let f = trianglefree_wu_curvature(g)?;
                    params = json!({ "order": 2, "closed_form": true });
                    results = json!({ "curvature": field_json(&f), "total": rational_str(&f.total()) });
                }
                (None, Some(k)) => {
                    let f = curvature_wu(g, k, &limits)?;
                    params = json!({ "order": k });
                    results = json!({ "curvature": field_json(&f), "total": rational_str(&f.total()) });
                }
                (spec, None) => {
                    let cx = complex_of(g, &limits)?;
                    let c = cx.clique_number().max(1);
                    let x = Valuation::parse_spec(spec.as_deref().unwrap_or("euler"), c)?;
                    let f = curvature_linear(g, &x)?;
                    params = json!({ "valuation": x.name() });
                    results = json!({ "curvature": field_json(&f), "total": rational_str(&f.total()) });
                }
            }
            ctx.report(Some(&input), "curvature", params, results);
        }
        Cmd::Index {
            valuation,
            order,
            function,
            random,
            matrix,
        } => {
            let input = load_graph(&cli.input, cli.format)?;
            let g = &input.graph;
            let f = pick_function(&function, random, g.n(), ctx.seed)?;
            match (valuation, order) {
                (Some(_), Some(_)) => {
                    return Err(Error::InvalidParam(
                        "pick either --valuation or --order".into(),
                    ))
                }
                (None, Some(2)) => {
                    let idx = wu_index(g, &f, &limits)?;
                    let mut results = serde_json::Map::new();
                    results.insert("indices".into(), field_json(&idx));
                    results.insert("total".into(), json!(rational_str(&idx.total())));
                    if matrix {
                        let m = wu_index_matrix(g, &f, &limits)?;
                        results.insert("matrix".into(), json!(m));
                    }
                    ctx.report(
                        Some(&input),
                        "index",
                        json!({ "order": 2, "random": random, "seed": ctx.seed }),
                        Value::Object(results),
                    );
                }
                (None, Some(k)) => {
                    return Err(Error::InvalidParam(format!(
                        "index supports linear valuations and wu order 2, got order {k}"
                    )))
                }
                (spec, None) => {
                    let cx = complex_of(g, &limits)?;
                    let c = cx.clique_number().max(1);
                    let x = Valuation::parse_spec(spec.as_deref().unwrap_or("euler"), c)?;
                    let idx = index_linear(g, &x, &f)?;
                    ctx.report(
                        Some(&input),
                        "index",
                        json!({ "valuation": x.name(), "random": random, "seed": ctx.seed }),
                        json!({ "indices": field_json(&idx), "total": rational_str(&idx.total()) }),
                    );
                }
            }
        }
        Cmd::Expectation {
            valuation,
            order,
            samples,
        } => {
            let input = load_graph(&cli.input, cli.format)?;
            let g = &input.graph;
            match samples {
                None => {
                    if order.is_some() {
                        return Err(Error::InvalidParam(
                            "exact expectation covers linear valuations; give --samples for wu".into(),
                        ));
                    }
                    let cx = complex_of(g, &limits)?;
                    let c = cx.clique_number().max(1);
                    let x = Valuation::parse_spec(&valuation, c)?;
                    let e = index_expectation_exact(g, &x)?;
                    ctx.report(
                        Some(&input),
                        "expectation",
                        json!({ "valuation": x.name(), "exact": true }),
                        json!({ "expectation": field_json(&e) }),
                    );
                }
                Some(s) => {
                    let target = match order {
                        Some(k) => McTarget::WuOrder(k),
                        None => {
                            let cx = complex_of(g, &limits)?;
                            let c = cx.clique_number().max(1);
                            McTarget::Linear(Valuation::parse_spec(&valuation, c)?)
                        }
                    };
                    let r = index_expectation_mc(g, &target, s, ctx.seed, &limits)?;
                    ctx.report(
                        Some(&input),
                        "expectation",
                        json!({ "samples": s, "seed": ctx.seed, "exact": false }),
                        json!({ "expectation": r.to_json() }),
                    );
                }
            }
        }
        Cmd::Refine => {
            let input = load_graph(&cli.input, cli.format)?;
            let r = refine(&input.graph, &limits)?;
            ctx.emit_graph(&r, None);
        }
        Cmd::Product { with, labels } => {
            let input = load_graph(&cli.input, cli.format)?;
            let second = load_graph(&with, cli.format)?;
            let p = cartesian(&input.graph, &second.graph, &limits)?;
            let extra = labels.then(|| json!({ "labels": p.labels_json() }));
            ctx.emit_graph(&p.graph, extra);
        }
        Cmd::Ds { k, c, bary, cubic } => match (k, c) {
            (Some(k), Some(c)) => {
                let x = if bary {
                    if k < 1 {
                        return Err(Error::InvalidParam("bary index is 1-based".into()));
                    }
                    Valuation::bary(k as usize, c)?
                } else {
                    Valuation::ds(k, c)?
                };
                let coeffs: Vec<String> =
                    x.coefficients().iter().map(|v| v.to_string()).collect();
                ctx.report(
                    None,
                    "ds",
                    json!({ "k": k, "c": c, "bary": bary }),
                    json!({ "name": x.name(), "coefficients": coeffs }),
                );
            }
            (None, None) => {
                let input = load_graph(&cli.input, cli.format)?;
                let cx = complex_of(&input.graph, &limits)?;
                let numbers = bary_numbers(&cx)?;
                let quad = ds_quadratic(&cx, &limits)?;
                let mut results = serde_json::Map::new();
                results.insert(
                    "bary_numbers".into(),
                    Value::Array(numbers.iter().map(big_str).collect()),
                );
                results.insert("quadratic".into(), matrix_json(&quad));
                if cubic {
                    let t = ds_cubic(&cx, &limits)?;
                    results.insert(
                        "cubic".into(),
                        Value::Array(t.iter().map(|m| matrix_json(m)).collect()),
                    );
                }
                ctx.report(Some(&input), "ds", json!({ "cubic": cubic }), Value::Object(results));
            }
            _ => {
                return Err(Error::InvalidParam(
                    "give both --k and --c for a vector, neither for graph tables".into(),
                ))
            }
        },
        Cmd::Classify => {
            let input = load_graph(&cli.input, cli.format)?;
            let class = classify(&input.graph, &limits)?;
            ctx.report(Some(&input), "classify", json!({}), class.to_json());
        }
        Cmd::Boundary => {
            let input = load_graph(&cli.input, cli.format)?;
            let (b, map) = boundary(&input.graph, &limits)?;
            ctx.emit_graph(&b, Some(json!({ "vertex_map": map })));
        }
        Cmd::Dimension => {
            let input = load_graph(&cli.input, cli.format)?;
            let d = inductive_dimension(&input.graph);
            let approx = d.to_f64().unwrap_or(f64::NAN);
            ctx.report(
                Some(&input),
                "dimension",
                json!({}),
                json!({ "dimension": rational_str(&d), "approx": approx }),
            );
        }
        Cmd::Intersect { a, b } => {
            let input = load_graph(&cli.input, cli.format)?;
            let parse_set = |s: &str| -> Result<Vec<u32>, Error> {
                s.split(',')
                    .filter(|t| !t.trim().is_empty())
                    .map(|t| {
                        t.trim()
                            .parse::<u32>()
                            .map_err(|_| Error::InvalidParam(format!("bad vertex {t:?}")))
                    })
                    .collect()
            };
            let va = parse_set(&a)?;
            let vb = parse_set(&b)?;
            let omega = wu_intersection(&input.graph, &va, &vb, &limits)?;
            let form = whitney::complex::intersection_form(&input.graph, &va, &vb, &limits)?;
            ctx.report(
                Some(&input),
                "intersect",
                json!({ "a": va, "b": vb }),
                json!({ "wu_intersection": omega.to_string(), "form": form.to_json() }),
            );
        }
        Cmd::PaperTables { table, list } => {
            if list {
                for name in tables::table_names() {
                    println!("{name}");
                }
                return Ok(());
            }
            let single = table != "all";
            let outcomes = tables::run(&table, &limits)?;
            let mut failed = false;
            for t in &outcomes {
                if t.pass {
                    println!("PASS {}", t.name);
                    if single {
                        println!("  {}", t.got);
                    }
                } else {
                    failed = true;
                    println!("FAIL {}", t.name);
                    println!("  expected: {}", t.expected);
                    println!("  got:      {}", t.got);
                }
            }
            if failed {
                return Err(Error::InvalidParam("paper table mismatch".into()));
            }
        }
    }
    Ok(())
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help and version are successful exits
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match run(cli) {
        Ok(()) => {}
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(exit_code(&e));
        }
    }
}
