#include <cstdio>
#include <exception>

#include <CLI11.hpp>

#include "pintswe/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Parallel-in-time shallow-water solver on the rotating sphere"};
    pintswe::runner::RunConfig cfg;

    app.add_option("--case", cfg.case_name, "Benchmark flow: gaussian | rossby | galewsky")
        ->envname("PINTSWE_CASE");
    app.add_option("--scheme", cfg.scheme, "Integrator: sdc | mlsdc | pfasst")
        ->envname("PINTSWE_SCHEME");
    app.add_option("--rf", cfg.r_fine, "Fine spectral truncation R_f")->envname("PINTSWE_RF");
    app.add_option("--dt", cfg.dt, "Time step size (s)")->envname("PINTSWE_DT");
    app.add_option("--tend", cfg.t_end, "Simulation horizon (s)")->envname("PINTSWE_TEND");
    app.add_option("--nodes", cfg.nodes_fine, "Fine collocation nodes (2, 3, or 5)")
        ->envname("PINTSWE_NODES");
    app.add_option("--coarse-nodes", cfg.nodes_coarse, "Coarse collocation nodes (2, 3, or 5)")
        ->envname("PINTSWE_COARSE_NODES");
    app.add_option("--sweeps,--iters", cfg.iterations,
                   "Sweeps (sdc) or iterations (mlsdc / pfasst)")
        ->envname("PINTSWE_ITERS");
    app.add_option("--alpha", cfg.alpha, "Spatial coarsening ratio R_c / R_f in (0, 1]")
        ->envname("PINTSWE_ALPHA");
    app.add_option("--nts", cfg.n_ts, "Time steps per pfasst block (= workers)")
        ->envname("PINTSWE_NTS");
    app.add_option("--nu", cfg.nu, "Diffusion coefficient (m^2/s)")->envname("PINTSWE_NU");
    app.add_option("--mode", cfg.mode, "pfasst execution: parallel | serial-emulation")
        ->envname("PINTSWE_MODE");
    app.add_option("--out", cfg.out_dir, "Output directory for run artifacts")
        ->envname("PINTSWE_OUT");
    app.add_option("--ref", cfg.ref_path, "Reference checkpoint for the error table")
        ->envname("PINTSWE_REF");
    app.add_option("--rnorm", cfg.r_norm, "Truncation of the error semi-norm")
        ->envname("PINTSWE_RNORM");

    app.add_option("--radius", cfg.radius, "Sphere radius (m)")->envname("PINTSWE_RADIUS");
    app.add_option("--rotation", cfg.omega, "Rotation rate (1/s)")->envname("PINTSWE_ROTATION");
    app.add_option("--gravity", cfg.gravity, "Gravity (m/s^2)")->envname("PINTSWE_GRAVITY");

    app.add_option("--hbar", cfg.gaussian.h_mean, "Gaussian dome: mean height (m)")
        ->envname("PINTSWE_HBAR");
    app.add_option("--amp", cfg.gaussian.amplitude, "Gaussian dome: bump amplitude (m)")
        ->envname("PINTSWE_AMP");
    app.add_option("--bump-width", cfg.gaussian.width, "Gaussian dome: bump width exponent")
        ->envname("PINTSWE_BUMP_WIDTH");
    app.add_option("--rh-omega", cfg.rossby.omega_wave, "Rossby-Haurwitz: angular parameter (1/s)")
        ->envname("PINTSWE_RH_OMEGA");
    app.add_option("--rh-wavenumber", cfg.rossby.wavenumber, "Rossby-Haurwitz: zonal wavenumber")
        ->envname("PINTSWE_RH_WAVENUMBER");
    app.add_option("--rh-h0", cfg.rossby.h0, "Rossby-Haurwitz: reference height (m)")
        ->envname("PINTSWE_RH_H0");
    app.add_option("--gal-umax", cfg.galewsky.u_max, "Galewsky: jet speed (m/s)")
        ->envname("PINTSWE_GAL_UMAX");
    app.add_option("--gal-hmean", cfg.galewsky.h_mean, "Galewsky: mean depth (m)")
        ->envname("PINTSWE_GAL_HMEAN");
    app.add_option("--gal-hpert", cfg.galewsky.h_pert, "Galewsky: bump amplitude (m)")
        ->envname("PINTSWE_GAL_HPERT");

    CLI11_PARSE(app, argc, argv);

    try {
        const auto result = pintswe::runner::run(cfg);
        std::printf("%s %s: %ld steps of dt=%g s in %.3f s wall\n", cfg.case_name.c_str(),
                    cfg.scheme.c_str(), std::lround(cfg.t_end / cfg.dt), cfg.dt,
                    result.wall_seconds);
        if (result.error)
            std::printf("error vs reference (R_norm=%d): Phi %.3e  zeta %.3e  delta %.3e\n",
                        result.error->r_norm, result.error->e_phi, result.error->e_vort,
                        result.error->e_div);
        if (!result.residual_history.empty())
            std::printf("final collocation residual: %.3e\n", result.residual_history.back());
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
