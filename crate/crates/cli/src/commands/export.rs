use std::fs;
use std::path::Path;

use kads_core::group_geom::{ambient_coords, metric_at, sample_points, COORD_LABELS};
use kads_core::sklyanin::tables::{closed_form_ambient, closed_form_local, closed_form_twisted, project_2plus1, BracketTable};
use serde_json::{json, Value};

use crate::config::{Format, RunConfig};
use crate::report::Suite;

struct Grid {
    header: Vec<String>,
    rows: Vec<Vec<f64>>,
}

impl Grid {
    fn render(&self, format: Format) -> Result<String, String> {
        match format {
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.header).map_err(|e| e.to_string())?;
                for r in &self.rows {
                    w.write_record(r.iter().map(|v| format!("{v:e}"))).map_err(|e| e.to_string())?;
                }
                let bytes = w.into_inner().map_err(|e| e.to_string())?;
                String::from_utf8(bytes).map_err(|e| e.to_string())
            }
            Format::Json => {
                let rows: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|r| Value::Object(self.header.iter().cloned().zip(r.iter().map(|v| json!(v))).collect()))
                    .collect();
                let mut s = serde_json::to_string_pretty(&rows).map_err(|e| e.to_string())?;
                s.push('\n');
                Ok(s)
            }
        }
    }
}

fn bracket_grid(table: &BracketTable, points: &[[f64; 4]]) -> Grid {
    let names = table.coords();
    let mut header: Vec<String> = COORD_LABELS[..4].iter().map(|s| s.to_string()).collect();
    if table.kind == kads_core::sklyanin::tables::TableKind::Ambient {
        header.extend(names.iter().map(|s| s.to_string()));
    }
    for a in 0..names.len() {
        for b in a + 1..names.len() {
            header.push(format!("{{{},{}}}", names[a], names[b]));
        }
    }
    let rows = points
        .iter()
        .map(|x| {
            let mut x = *x;
            if table.projected {
                x[3] = 0.0;
            }
            let y = table.coords_of_local(&x);
            let m = table.matrix(&y);
            let mut row = x.to_vec();
            if table.kind == kads_core::sklyanin::tables::TableKind::Ambient {
                row.extend(&y);
            }
            for a in 0..names.len() {
                for b in a + 1..names.len() {
                    row.push(m[a][b]);
                }
            }
            row
        })
        .collect();
    Grid { header, rows }
}

fn coordinate_grid(lambda: f64, points: &[[f64; 4]]) -> Grid {
    let mut header: Vec<String> = COORD_LABELS[..4].iter().map(|s| s.to_string()).collect();
    header.extend(["s4", "s0", "s1", "s2", "s3"].map(String::from));
    let rows = points.iter().map(|x| x.iter().copied().chain(ambient_coords(x, lambda)).collect()).collect();
    Grid { header, rows }
}

fn metric_grid(lambda: f64, points: &[[f64; 4]]) -> Grid {
    let mut header: Vec<String> = COORD_LABELS[..4].iter().map(|s| s.to_string()).collect();
    for a in 0..4 {
        for b in a..4 {
            header.push(format!("g{a}{b}"));
        }
    }
    let rows = points
        .iter()
        .filter_map(|x| {
            let g = metric_at(x, lambda).ok()?;
            let mut row = x.to_vec();
            for a in 0..4 {
                for b in a..4 {
                    row.push(g[(a, b)]);
                }
            }
            Some(row)
        })
        .collect();
    Grid { header, rows }
}

fn lambda_label(lambda: f64) -> String {
    format!("{lambda}").replace('-', "m").replace('.', "p")
}

pub fn run(cfg: &RunConfig, dir: &Path) -> Result<Vec<Suite>, String> {
    fs::create_dir_all(dir).map_err(|e| format!("cannot create {}: {e}", dir.display()))?;
    let ext = match cfg.format {
        Format::Csv => "csv",
        Format::Json => "json",
    };
    let (kinv, twist) = (cfg.kinv(), cfg.twist_value());
    let mut out = Vec::new();
    for lambda in cfg.lambdas() {
        let points: Vec<[f64; 4]> = sample_points(lambda, cfg.samples, cfg.seed).iter().map(|p| p.local()).collect();
        let l = lambda_label(lambda);
        let mut files: Vec<(String, Grid)> = vec![
            (format!("brackets_local_lambda{l}"), bracket_grid(&closed_form_local(lambda, kinv), &points)),
            (format!("brackets_twisted_lambda{l}"), bracket_grid(&closed_form_twisted(lambda, kinv, twist), &points)),
            (format!("brackets_ambient_lambda{l}"), bracket_grid(&closed_form_ambient(lambda, kinv), &points)),
            (format!("brackets_2plus1_lambda{l}"), bracket_grid(&project_2plus1(&closed_form_local(lambda, kinv)), &points)),
            (format!("coordinates_lambda{l}"), coordinate_grid(lambda, &points)),
        ];
        files.push((format!("metric_lambda{l}"), metric_grid(lambda, &points)));
        for (stem, grid) in files {
            let name = format!("{stem}.{ext}");
            let text = grid.render(cfg.format)?;
            fs::write(dir.join(&name), text).map_err(|e| format!("cannot write {name}: {e}"))?;
            let complete = grid.rows.len() == points.len() && grid.rows.iter().flatten().all(|v| v.is_finite());
            out.push(Suite::check(
                format!("export {name}"),
                "export",
                complete,
                json!({ "file": name, "rows": grid.rows.len(), "columns": grid.header }),
            ));
        }
    }
    Ok(out)
}
