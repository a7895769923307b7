//! Deterministic SVG output for packings.
//!
//! All geometry stays exact up to the point a number is written out; the
//! page transform is an exact rational affine map and every coordinate is
//! printed with 12 significant digits.

use std::fmt::Write as _;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::frames::{frame_of, PAIRS};
use crate::numerics::{format_decimal, int, rat, Rat};
use crate::symbols::{root_configs, CircleSymbol, Packing};

const DIGITS: u32 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LabelMode {
    #[default]
    None,
    Bends,
    Symbols,
}

impl std::str::FromStr for LabelMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "none" => Ok(LabelMode::None),
            "bends" => Ok(LabelMode::Bends),
            "symbols" => Ok(LabelMode::Symbols),
            other => Err(format!("unknown label mode {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderOptions {
    pub width_px: u32,
    pub label_mode: LabelMode,
    /// Draw the six principal-frame hypotenuses annotated with (Δ, Γ, H).
    pub draw_frame: bool,
    /// Circles whose rendered radius falls below this are skipped.
    pub min_radius_px: Rat,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self {
            width_px: 800,
            label_mode: LabelMode::None,
            draw_frame: false,
            min_radius_px: rat(1, 2),
        }
    }
}

impl RenderOptions {
    pub fn validate(&self) -> Result<()> {
        if self.width_px == 0 {
            return Err(Error::InvalidOptions("width_px must be positive".into()));
        }
        if !self.min_radius_px.is_positive() {
            return Err(Error::InvalidOptions(
                "min_radius_px must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// Exact map from packing coordinates to page pixels. The enclosing circle
/// of radius `R` is fitted to the page with a 5% margin on every side and the
/// y axis points up.
#[derive(Debug, Clone)]
pub struct PageTransform {
    scale: Rat,
    half_extent: Rat,
}

impl PageTransform {
    pub fn new(enclosing: &CircleSymbol, width_px: u32) -> Self {
        let half_extent = enclosing.radius() * rat(11, 10);
        let scale = Rat::from_integer(int(width_px as i64)) / (&half_extent * rat(2, 1));
        Self { scale, half_extent }
    }

    pub fn point(&self, x: &Rat, y: &Rat) -> (Rat, Rat) {
        (
            (x + &self.half_extent) * &self.scale,
            (&self.half_extent - y) * &self.scale,
        )
    }

    pub fn length(&self, len: &Rat) -> Rat {
        len * &self.scale
    }
}

fn num(r: &Rat) -> String {
    format_decimal(r, DIGITS)
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// Renders the packing as an SVG 1.1 document using only `svg`, `g`,
/// `circle`, `line` and `text` elements.
pub fn render_svg(packing: &Packing, opts: &RenderOptions) -> Result<String> {
    opts.validate()?;
    if packing.is_empty() {
        return Err(Error::EmptyPacking);
    }
    let enclosing = packing.enclosing();
    let page = PageTransform::new(enclosing, opts.width_px);
    let width = opts.width_px;
    let stroke = num(&rat(width as i64, 1000));

    let mut svg = String::new();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{width}" viewBox="0 0 {width} {width}">"#
    )
    .unwrap();

    let mut drawn: Vec<(&CircleSymbol, Rat, Rat, Rat)> = Vec::new();
    for circle in packing.circles() {
        let r = page.length(&circle.radius());
        let is_enclosing = circle.bend().is_negative();
        if !is_enclosing && r < opts.min_radius_px {
            continue;
        }
        let (cx, cy) = circle.center();
        let (px, py) = page.point(&cx, &cy);
        drawn.push((circle, px, py, r));
    }

    writeln!(
        svg,
        r#"<g fill="none" stroke="black" stroke-width="{stroke}">"#
    )
    .unwrap();
    for (circle, px, py, r) in &drawn {
        let class = if circle.bend().is_negative() {
            "enclosing"
        } else {
            "disk"
        };
        writeln!(
            svg,
            r#"<circle class="{class}" cx="{}" cy="{}" r="{}"/>"#,
            num(px),
            num(py),
            num(r)
        )
        .unwrap();
    }
    svg.push_str("</g>\n");

    if opts.label_mode != LabelMode::None {
        writeln!(
            svg,
            r#"<g font-family="sans-serif" text-anchor="middle" dominant-baseline="central">"#
        )
        .unwrap();
        for (circle, px, py, r) in &drawn {
            if circle.bend().is_negative() {
                continue;
            }
            let text = match opts.label_mode {
                LabelMode::Bends => circle.bend().to_string(),
                LabelMode::Symbols => circle.to_string(),
                LabelMode::None => unreachable!(),
            };
            let chars = text.chars().count().max(2) as i64;
            let size = r * rat(2, chars).min(rat(4, 5));
            writeln!(
                svg,
                r#"<text x="{}" y="{}" font-size="{}">{}</text>"#,
                num(px),
                num(py),
                num(&size),
                escape(&text)
            )
            .unwrap();
        }
        svg.push_str("</g>\n");
    }

    if opts.draw_frame {
        let (root, _) = root_configs(packing.key())?;
        let frame = frame_of(&root)?;
        let font = num(&rat(width as i64, 60));
        writeln!(svg, r#"<g stroke="red" stroke-width="{stroke}" fill="red" font-family="sans-serif" font-size="{font}" text-anchor="middle">"#).unwrap();
        for (idx, &(i, j)) in PAIRS.iter().enumerate() {
            let (ax, ay) = root.circle(i).center();
            let (bx, by) = root.circle(j).center();
            let (x1, y1) = page.point(&ax, &ay);
            let (x2, y2) = page.point(&bx, &by);
            writeln!(
                svg,
                r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                num(&x1),
                num(&y1),
                num(&x2),
                num(&y2)
            )
            .unwrap();
            let half = rat(1, 2);
            let mx = (&x1 + &x2) * &half;
            let my = (&y1 + &y2) * &half;
            let t = &frame.entries()[idx];
            writeln!(
                svg,
                r#"<text stroke="none" x="{}" y="{}">{}</text>"#,
                num(&mx),
                num(&my),
                escape(&t.to_string())
            )
            .unwrap();
        }
        svg.push_str("</g>\n");
    }

    svg.push_str("</svg>\n");
    Ok(svg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::GasketKey;
    use crate::symbols::{generate, tangent};

    fn window(max: i64) -> Packing {
        generate(&GasketKey::from_i64s(1, 0, 1, 1).unwrap(), &int(max)).unwrap()
    }

    fn texts(svg: &str) -> Vec<String> {
        svg.lines()
            .filter_map(|l| {
                l.split_once('>')
                    .filter(|_| l.starts_with("<text"))
                    .map(|(_, rest)| rest)
            })
            .map(|rest| rest.trim_end_matches("</text>").to_string())
            .collect()
    }

    fn attr(line: &str, name: &str) -> f64 {
        let start = line.find(&format!(" {name}=\"")).unwrap() + name.len() + 3;
        let end = line[start..].find('"').unwrap() + start;
        line[start..end].parse().unwrap()
    }

    #[test]
    fn bend_labels() {
        let svg = render_svg(
            &window(15),
            &RenderOptions {
                label_mode: LabelMode::Bends,
                ..Default::default()
            },
        )
        .unwrap();
        let labels = texts(&svg);
        for want in ["2", "3", "6", "11", "14", "15"] {
            assert!(labels.iter().any(|l| l == want), "missing label {want}");
        }
        assert_eq!(labels.iter().filter(|l| *l == "2").count(), 2);
        assert_eq!(labels.iter().filter(|l| *l == "3").count(), 2);
    }

    #[test]
    fn five_circles() {
        let svg = render_svg(&window(3), &RenderOptions::default()).unwrap();
        assert_eq!(svg.matches("<circle").count(), 5);
        assert!(texts(&svg).is_empty());
    }

    #[test]
    fn invalid_options() {
        let bad = RenderOptions {
            width_px: 0,
            ..Default::default()
        };
        assert!(matches!(
            render_svg(&window(3), &bad),
            Err(Error::InvalidOptions(_))
        ));
        let bad = RenderOptions {
            min_radius_px: rat(0, 1),
            ..Default::default()
        };
        assert!(matches!(
            render_svg(&window(3), &bad),
            Err(Error::InvalidOptions(_))
        ));
    }

    #[test]
    fn culling_keeps_enclosing() {
        let opts = RenderOptions {
            min_radius_px: rat(10_000, 1),
            ..Default::default()
        };
        let svg = render_svg(&window(30), &opts).unwrap();
        assert_eq!(svg.matches("<circle").count(), 1);
        assert!(svg.contains(r#"class="enclosing""#));
    }

    #[test]
    fn frame_overlay() {
        let opts = RenderOptions {
            draw_frame: true,
            ..Default::default()
        };
        let svg = render_svg(&window(3), &opts).unwrap();
        assert_eq!(svg.matches("<line").count(), 6);
        assert!(texts(&svg)
            .iter()
            .any(|t| t == "(3, 4, 5)" || t == "(-3, -4, 5)"));
    }

    #[test]
    fn symbol_labels() {
        let opts = RenderOptions {
            label_mode: LabelMode::Symbols,
            ..Default::default()
        };
        let svg = render_svg(&window(3), &opts).unwrap();
        assert!(texts(&svg).iter().any(|t| t == "(1, 0)/2"));
    }

    #[test]
    fn rendered_tangency_within_tolerance() {
        let key = GasketKey::from_i64s(6, 2, 5, 8).unwrap();
        let packing = generate(&key, &int(120)).unwrap();
        let svg = render_svg(&packing, &RenderOptions::default()).unwrap();
        let circles: Vec<(f64, f64, f64)> = svg
            .lines()
            .filter(|l| l.starts_with("<circle"))
            .map(|l| (attr(l, "cx"), attr(l, "cy"), attr(l, "r")))
            .collect();
        assert_eq!(circles.len(), packing.len());
        let index = |c: &CircleSymbol| packing.circles().iter().position(|x| x == c).unwrap();
        let mut checked = 0;
        for config in packing.configs() {
            for i in 0..4 {
                for j in (i + 1)..4 {
                    let (a, b) = (config.circle(i), config.circle(j));
                    assert!(tangent(a, b));
                    let (ax, ay, ar) = circles[index(a)];
                    let (bx, by, br) = circles[index(b)];
                    let dist = ((ax - bx).powi(2) + (ay - by).powi(2)).sqrt();
                    let expect = if a.bend().is_negative() || b.bend().is_negative() {
                        (ar - br).abs()
                    } else {
                        ar + br
                    };
                    assert!(
                        (dist - expect).abs() <= 1e-9 * expect.max(ar).max(br),
                        "{a} {b}"
                    );
                    checked += 1;
                }
            }
        }
        assert!(checked > 100);
    }

    #[test]
    fn deterministic_bytes() {
        let opts = RenderOptions {
            label_mode: LabelMode::Bends,
            draw_frame: true,
            ..Default::default()
        };
        let a = render_svg(&window(60), &opts).unwrap();
        let b = render_svg(&window(60), &opts).unwrap();
        assert_eq!(a, b);
    }
}
