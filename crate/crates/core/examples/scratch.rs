use hurwitz_core::eo::{omega_eval, omega_first_variable_residue, EOConfig, SpectralCurve, SplitMix64};
use hurwitz_core::xibasis::{fit_expansion, omega_exact_eval};
use num_complex::Complex64;

fn draw(rng: &mut SplitMix64, a: u32, n: usize) -> Vec<Complex64> {
    let scale = (a as f64).powf(-1.0 / a as f64);
    loop {
        let pts: Vec<Complex64> = (0..n).map(|_| {
            let m = scale * (0.1 + 0.4 * rng.next_f64());
            let t = 2.0 * std::f64::consts::PI * rng.next_f64();
            Complex64::from_polar(m, t)
        }).collect();
        if (0..n).all(|i| (i+1..n).all(|j| (pts[i]-pts[j]).norm() >= 0.05*scale)) { return pts; }
    }
}

fn main() {
    let cfg = EOConfig { radius_factor: 0.4, ..Default::default() };
    for (g, n, aa) in [(0u32, 3usize, vec![1u32,2,3]), (0,4,vec![1,2,3]), (1,1,vec![1,2,3]), (1,2,vec![1,2,3]), (2,1,vec![1,2])] {
        for a in aa {
            let exp = fit_expansion(a, g, n).unwrap();
            let curve = SpectralCurve::new(a);
            let mut rng = SplitMix64::new(7);
            let mut w = [0.0f64; 6];
            for _ in 0..5 {
                let zs = draw(&mut rng, a, n);
                let exact = omega_exact_eval(&exp, &zs).unwrap();
                let base = omega_eval(&curve, g, n, &zs, &cfg).unwrap();
                let dbl = omega_eval(&curve, g, n, &zs, &EOConfig { quad_points: 128, ..cfg.clone() }).unwrap();
                let half = omega_eval(&curve, g, n, &zs, &EOConfig { radius_factor: 0.2, ..cfg.clone() }).unwrap();
                w[0] = w[0].max((base-exact).norm()/exact.norm());
                w[1] = w[1].max((dbl-base).norm()/base.norm());
                w[2] = w[2].max((half-base).norm()/base.norm());
                // permutation symmetry
                if n >= 2 {
                    let mut p = zs.clone(); p.swap(0, n-1);
                    let perm = omega_eval(&curve, g, n, &p, &cfg).unwrap();
                    w[3] = w[3].max((perm-base).norm()/base.norm());
                }
                // Z_a covariance: W(zeta z) * zeta^n = W(z)
                let zeta = Complex64::from_polar(1.0, 2.0*std::f64::consts::PI / a as f64);
                let rot: Vec<Complex64> = zs.iter().map(|z| z*zeta).collect();
                let wrot = omega_eval(&curve, g, n, &rot, &cfg).unwrap();
                let back = wrot * zeta.powu(n as u32);
                w[4] = w[4].max((back-base).norm()/base.norm());
                // first-variable residue vanishing
                for which in 0..a as usize {
                    let r = omega_first_variable_residue(&curve, g, n, which, &zs[1..], &cfg).unwrap();
                    w[5] = w[5].max(r.norm());
                }
            }
            println!("(g,n)=({g},{n}) a={a}: exact={:.1e} dbl={:.1e} half={:.1e} perm={:.1e} cov={:.1e} res={:.1e}",
                w[0], w[1], w[2], w[3], w[4], w[5]);
        }
    }
}
