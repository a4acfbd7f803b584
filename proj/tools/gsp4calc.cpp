// Batch front end for the GSp4 mod-p weight calculus: classification,
// weight association, genericity, lift planning, classical weights and
// restricted-range weight-set enumeration over representation description
// files.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gsp4/job.hpp"

namespace {

int run_single(const std::string& input_path, const std::vector<std::string>& tasks,
               std::optional<std::int64_t> prime, const std::string& window_spec,
               const std::string& format) {
    std::ifstream in(input_path);
    if (!in) {
        std::cerr << "error: cannot open input file '" << input_path << "'\n";
        return 2;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();

    gsp4::JobSpec job = gsp4::parse_job(buffer.str(), tasks, prime, window_spec);
    nlohmann::json report = gsp4::run(job);

    if (format == "text")
        std::cout << gsp4::render_text(report);
    else
        std::cout << report.dump(2) << "\n";

    if (report["results"].contains("classical") &&
        !report["results"]["classical"]["found"].get<bool>()) {
        std::cerr << "error: " << report["results"]["classical"]["reason"].get<std::string>()
                  << "\n";
        return 3;
    }
    return 0;
}

int run_enumerate(std::int64_t prime, const std::string& type_name, const std::string& window_spec,
                  const std::string& format, int jobs, bool force) {
    gsp4::Prime p(prime);
    if (p.value() > 11 && !force) {
        std::cerr << "error: enumeration over p = " << p.value()
                  << " is expensive (documented cost envelope covers p in {3,5,7,11}); "
                     "pass --force to proceed\n";
        return 1;
    }

    gsp4::RepType type;
    if (type_name == "borel") type = gsp4::RepType::BorelOrdinary;
    else if (type_name == "siegel") type = gsp4::RepType::SiegelOrdinary;
    else if (type_name == "klingen") type = gsp4::RepType::KlingenOrdinary;
    else if (type_name == "endoscopic") type = gsp4::RepType::Endoscopic;
    else if (type_name == "irreducible") type = gsp4::RepType::Irreducible;
    else {
        std::cerr << "error: unknown enumeration type '" << type_name << "'\n";
        return 1;
    }

    gsp4::SearchWindow window =
        gsp4::parse_window_spec(window_spec, gsp4::SearchWindow::defaults(p));
    gsp4::EnumerationResult result = gsp4::enumerate_mode(p, type, window, jobs);

    if (format == "text") {
        for (const auto& r : result.reports) std::cout << gsp4::render_text(r) << "\n";
        std::cout << "summary: " << result.summary.dump() << "\n";
    } else {
        nlohmann::json out;
        out["schema"] = "gsp4-weights/1";
        out["reports"] = result.reports;
        out["summary"] = result.summary;
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gsp4calc - mod-p weight calculus for 4-dimensional symplectic local Galois data"};

    std::string input_path;
    std::string task_list;
    std::string window_spec;
    std::string format = "json";
    std::string enumerate_type;
    std::int64_t prime = 0;
    int jobs = 1;
    bool force = false;

    app.add_option("--input", input_path, "representation description file (key-value text or JSON)");
    app.add_option("--prime", prime, "odd prime p (optional when the input file carries one)");
    app.add_option("--task", task_list,
                   "comma-separated tasks: classify,weight,generic,lift,classical,pdcris,fl-check");
    app.add_option("--window", window_spec, "search window overrides, e.g. a=1:21,b=1:21,c=0:12,w=0:12");
    app.add_option("--format", format, "output format: json (canonical) or text")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--enumerate", enumerate_type,
                   "enumerate all inertial data of a type: borel,siegel,klingen,endoscopic,irreducible");
    app.add_option("--jobs", jobs, "worker threads for --enumerate")->check(CLI::PositiveNumber);
    app.add_flag("--force", force, "run enumerations outside the documented cost envelope");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!enumerate_type.empty()) {
            if (prime == 0) {
                std::cerr << "error: --enumerate requires --prime\n";
                return 1;
            }
            return run_enumerate(prime, enumerate_type, window_spec, format, jobs, force);
        }
        if (input_path.empty()) {
            std::cerr << "error: give --input FILE or --enumerate TYPE (see --help)\n";
            return 1;
        }
        std::vector<std::string> tasks;
        if (!task_list.empty()) {
            std::stringstream ss(task_list);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty()) tasks.push_back(item);
        }
        std::optional<std::int64_t> prime_opt;
        if (prime != 0) prime_opt = prime;
        return run_single(input_path, tasks, prime_opt, window_spec, format);
    } catch (const gsp4::window_too_small& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const gsp4::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const gsp4::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
