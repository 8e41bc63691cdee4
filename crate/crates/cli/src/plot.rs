//! 2D cone-slice plotting: exact CSV ray data plus a presentation-only SVG.
//!
//! The CSV is the testable artifact — one row per boundary ray per piece,
//! with exact rational coordinates. The SVG draws the pseudo-effective and
//! nef boundary rays and shades the sign pieces, with the all-positive
//! piece labeled as the ample cone; its coordinates are floats and carry no
//! mathematical weight.

use std::fmt::Write as _;

use tensamp_core::cone::ConeQ;
use tensamp_core::exact::{Rat, RatVec};
use tensamp_core::surface::SurfaceModel;

use crate::CliError;

#[derive(Clone, Debug)]
pub struct LabeledRay {
    pub group: &'static str,
    pub label: String,
    pub coords: RatVec,
}

#[derive(Clone, Debug)]
pub struct PieceSector {
    pub label: String,
    pub signs: Vec<(String, i8)>,
    pub start: RatVec,
    pub end: RatVec,
}

#[derive(Clone, Debug)]
pub struct ConePlot {
    pub rays: Vec<LabeledRay>,
    pub sectors: Vec<PieceSector>,
}

fn cross(a: &RatVec, b: &RatVec) -> Rat {
    &(&a[0] * &b[1]) - &(&a[1] * &b[0])
}

fn piece_label(signs: &[(String, i8)]) -> String {
    let negatives: Vec<&str> = signs
        .iter()
        .filter(|(_, s)| *s < 0)
        .map(|(n, _)| n.as_str())
        .collect();
    if negatives.is_empty() {
        "Amp".to_owned()
    } else {
        format!("Big_{{{},-}}", negatives.join(","))
    }
}

/// Builds the plot data for a model whose cone generators lie in the plane
/// spanned by the two given basis vectors of the lattice.
pub fn cone_plot(model: &SurfaceModel, axis_u: usize, axis_v: usize) -> Result<ConePlot, CliError> {
    let rank = model.rank();
    if axis_u >= rank || axis_v >= rank || axis_u == axis_v {
        return Err(CliError::usage(format!(
            "slice axes ({axis_u},{axis_v}) must be two distinct basis indices below {rank}"
        )));
    }
    let u = RatVec::unit(rank, axis_u);
    let v = RatVec::unit(rank, axis_v);
    let pieces = model
        .tensor_ample_cone_pieces()
        .map_err(|e| CliError::usage(e.to_string()))?;

    let pseff_extremes = pieces
        .big_cone
        .slice2d(&u, &v)
        .map_err(|e| CliError::usage(format!("cannot slice the pseudo-effective cone: {e}")))?;
    if pseff_extremes.len() != 2 {
        return Err(CliError::usage(
            "the pseudo-effective cone has no two-dimensional sector to plot",
        ));
    }

    // label a 2d ray by a catalog curve on the same ray if one exists,
    // else by its expression in the basis names
    let names = model.lattice().basis_names();
    let basis_label = |ray: &RatVec| -> String {
        let mut parts: Vec<String> = Vec::new();
        for (coef, name) in [(&ray[0], &names[axis_u]), (&ray[1], &names[axis_v])] {
            if coef.is_zero() {
                continue;
            }
            let sign = if coef.is_negative() && !parts.is_empty() {
                ""
            } else if !parts.is_empty() {
                "+"
            } else {
                ""
            };
            if coef.abs().is_one() {
                let neg = if coef.is_negative() { "-" } else { "" };
                parts.push(format!("{sign}{neg}{name}"));
            } else {
                parts.push(format!("{sign}{coef}{name}"));
            }
        }
        parts.join("")
    };
    let curve_label = |ray: &RatVec| -> String {
        model
            .curves()
            .iter()
            .find_map(|c| {
                let img = RatVec::new(vec![
                    c.class().coeffs()[axis_u].clone(),
                    c.class().coeffs()[axis_v].clone(),
                ])
                .primitive_integer();
                (&img == ray).then(|| c.name().to_owned())
            })
            .unwrap_or_else(|| basis_label(ray))
    };

    let mut rays: Vec<LabeledRay> = Vec::new();
    for r in &pseff_extremes {
        rays.push(LabeledRay {
            group: "PsEff",
            label: curve_label(r),
            coords: r.clone(),
        });
    }
    if let Some(nef) = model.nef_gens() {
        let nef_cone = ConeQ::new(rank, nef.iter().map(|g| g.coeffs().clone()).collect())
            .map_err(|e| CliError::usage(e.to_string()))?;
        let nef_extremes = nef_cone
            .slice2d(&u, &v)
            .map_err(|e| CliError::usage(format!("cannot slice the nef cone: {e}")))?;
        for r in &nef_extremes {
            rays.push(LabeledRay {
                group: "Nef",
                label: curve_label(r),
                coords: r.clone(),
            });
        }
    }

    // sector boundaries: pseff extremes plus the orthogonal lines of the
    // negative curves, restricted to the pseff sector
    let start = pseff_extremes[0].clone();
    let end = pseff_extremes[1].clone();
    let in_sector =
        |r: &RatVec| -> bool { !cross(&start, r).is_negative() && !cross(r, &end).is_negative() };
    let mut boundaries: Vec<RatVec> = vec![start.clone(), end.clone()];
    for (_, half) in &pieces.perps {
        let functional = RatVec::new(vec![
            half.normal[axis_u].clone(),
            half.normal[axis_v].clone(),
        ]);
        if functional.is_zero() {
            continue;
        }
        let dir = RatVec::new(vec![-&functional[1], functional[0].clone()]).primitive_integer();
        for cand in [dir.clone(), -&dir] {
            if in_sector(&cand) && !boundaries.contains(&cand) {
                boundaries.push(cand);
            }
        }
    }
    // counterclockwise from the start ray
    boundaries.sort_by(|a, b| {
        use std::cmp::Ordering;
        if a == b {
            return Ordering::Equal;
        }
        let ca = cross(&start, a);
        let cb = cross(&start, b);
        // all rays lie in the sector, so the cross with the start ray
        // increases monotonically up to parallelism with the end
        match (ca.is_zero(), cb.is_zero()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            (false, false) => {
                if cross(a, b).is_positive() {
                    Ordering::Less
                } else if cross(b, a).is_positive() {
                    Ordering::Greater
                } else {
                    Ordering::Equal
                }
            }
        }
    });
    boundaries.dedup();

    // classify each open sector by its midpoint and merge equal neighbours
    let mut sectors: Vec<PieceSector> = Vec::new();
    for pair in boundaries.windows(2) {
        let mid2 = &pair[0] + &pair[1];
        let mut mid = RatVec::zeros(rank);
        mid = mid.add_scaled(&mid2[0], &u);
        mid = mid.add_scaled(&mid2[1], &v);
        let matching = pieces.pieces.iter().find(|p| {
            p.signs.iter().all(|(name, sign)| {
                let half = &pieces
                    .perps
                    .iter()
                    .find(|(n, _)| n == name)
                    .expect("piece signs index the perp list")
                    .1;
                let val = half.normal.dot(&mid);
                (*sign > 0 && val.is_positive()) || (*sign < 0 && val.is_negative())
            })
        });
        let Some(piece) = matching else { continue };
        let label = piece_label(&piece.signs);
        if let Some(last) = sectors.last_mut() {
            if last.signs == piece.signs {
                last.end = pair[1].clone();
                continue;
            }
        }
        sectors.push(PieceSector {
            label,
            signs: piece.signs.clone(),
            start: pair[0].clone(),
            end: pair[1].clone(),
        });
    }

    Ok(ConePlot { rays, sectors })
}

/// Exact ray data: `piece_id,ray_index,coord_1,coord_2`.
pub fn to_csv(plot: &ConePlot) -> String {
    let mut out = String::from("piece_id,ray_index,coord_1,coord_2\n");
    for (piece_id, sector) in plot.sectors.iter().enumerate() {
        for (ray_index, ray) in [&sector.start, &sector.end].into_iter().enumerate() {
            let _ = writeln!(
                out,
                "{piece_id},{ray_index},{},{}",
                ray[0], ray[1]
            );
        }
    }
    out
}

fn rat_to_f64(r: &Rat) -> f64 {
    let n: f64 = r.numer().to_string().parse().unwrap_or(0.0);
    let d: f64 = r.denom().to_string().parse().unwrap_or(1.0);
    n / d
}

fn svg_point(ray: &RatVec, scale: f64) -> (f64, f64) {
    let x = rat_to_f64(&ray[0]);
    let y = rat_to_f64(&ray[1]);
    let len = (x * x + y * y).sqrt().max(1e-9);
    (x / len * scale, y / len * scale)
}

/// Presentation-only SVG: shaded sign pieces, labeled boundary rays, and a
/// legend naming each piece.
pub fn to_svg(plot: &ConePlot) -> String {
    let (width, height) = (420.0, 420.0);
    let (ox, oy) = (140.0, 300.0);
    let scale = 150.0;
    let to_screen = |ray: &RatVec| -> (f64, f64) {
        let (x, y) = svg_point(ray, scale);
        (ox + x, oy - y)
    };
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    );
    let _ = writeln!(
        out,
        "  <rect width=\"{width}\" height=\"{height}\" fill=\"white\"/>"
    );
    for (i, sector) in plot.sectors.iter().enumerate() {
        let (x1, y1) = to_screen(&sector.start);
        let (x2, y2) = to_screen(&sector.end);
        let opacity = 0.12 + 0.18 * (i as f64);
        let _ = writeln!(
            out,
            "  <path class=\"piece\" d=\"M {ox:.2} {oy:.2} L {x1:.2} {y1:.2} L {x2:.2} {y2:.2} Z\" fill=\"black\" fill-opacity=\"{opacity:.2}\"/>"
        );
    }
    for ray in &plot.rays {
        let (x, y) = to_screen(&ray.coords);
        let _ = writeln!(
            out,
            "  <line class=\"ray\" x1=\"{ox:.2}\" y1=\"{oy:.2}\" x2=\"{x:.2}\" y2=\"{y:.2}\" stroke=\"black\" stroke-width=\"1.5\"/>"
        );
        let (lx, ly) = (ox + (x - ox) * 1.12, oy + (y - oy) * 1.12);
        let _ = writeln!(
            out,
            "  <text class=\"ray-label\" x=\"{lx:.2}\" y=\"{ly:.2}\" font-size=\"12\">{}: {}</text>",
            ray.group, ray.label
        );
    }
    for (i, sector) in plot.sectors.iter().enumerate() {
        let y = 20.0 + 16.0 * (i as f64);
        let opacity = 0.12 + 0.18 * (i as f64);
        let _ = writeln!(
            out,
            "  <rect x=\"300\" y=\"{:.2}\" width=\"12\" height=\"12\" fill=\"black\" fill-opacity=\"{opacity:.2}\"/>",
            y - 10.0
        );
        let _ = writeln!(
            out,
            "  <text class=\"legend\" x=\"318\" y=\"{y:.2}\" font-size=\"12\">{}</text>",
            sector.label
        );
    }
    out.push_str("</svg>\n");
    out
}
