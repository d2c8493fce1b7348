#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "sl3web/bijection.hpp"
#include "sl3web/io_json.hpp"
#include "sl3web/render.hpp"

using namespace sl3web;

namespace {

std::string read_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::bad_web_json, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::bad_web_json, "cannot open " + path + " for writing");
    out << text;
}

web load_web(const std::string& path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_text(path));
    } catch (const nlohmann::json::exception& e) {
        fail(errc::bad_web_json, path + ": " + e.what());
    }
    return web_from_json(j);
}

std::string web_document(const web& w) {
    nlohmann::json j = web_to_json(w);
    j["canonical_code"] = canonical_code(w);
    return j.dump(2) + "\n";
}

rat64 parse_scale(const std::string& text) {
    rat64 scale;
    size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            scale = rat64(std::stoll(text));
        } else {
            std::int64_t den = std::stoll(text.substr(slash + 1));
            if (den == 0) fail(errc::bad_web_json, "scale denominator is zero in \"" + text + "\"");
            scale = rat64(std::stoll(text.substr(0, slash)), den);
        }
    } catch (const op_error&) {
        throw;
    } catch (const std::exception&) {
        fail(errc::bad_web_json, "unreadable scale \"" + text + "\" (want P or P/Q)");
    }
    if (!(rat64(0) < scale)) fail(errc::bad_web_json, "scale must be positive, got \"" + text + "\"");
    return scale;
}

int run(int argc, char** argv) {
    CLI::App app{"semistandard tableaux <-> non-elliptic trivalent webs"};
    app.require_subcommand(1);
    std::string tableau_text, sign_text, with_text, web_path, with_path, out_path, format_text = "svg",
                               scale_text = "1";
    int at = 0, threads = 0;
    bool with_webs = false, as_json = false, label_depths = false, no_sign_labels = false;

    auto* build = app.add_subcommand("build", "tableau + sign string -> web JSON with canonical code");
    build->add_option("--tableau", tableau_text, "tableau text, e.g. 112/345")->required();
    build->add_option("--sign", sign_text, "sign string, e.g. -++++")->required();
    build->add_option("--out", out_path, "output file (default stdout)");

    auto* invert = app.add_subcommand("invert", "web JSON -> tableau text");
    invert->add_option("--web", web_path, "web JSON file, or - for stdin")->required();

    auto* enumerate = app.add_subcommand("enumerate", "list every filling of a sign string");
    enumerate->add_option("--sign", sign_text)->required();
    enumerate->add_flag("--webs", with_webs, "append each web's canonical code");

    auto* verify = app.add_subcommand("verify", "exhaustive theorem checks");
    verify->require_subcommand(1);
    auto* vb = verify->add_subcommand("bijection", "round trip, distinctness, non-ellipticity, tau pairs");
    vb->add_option("--sign", sign_text)->required();
    auto* vr = verify->add_subcommand("rotation", "rotate(web) vs web(promote)");
    vr->add_option("--sign", sign_text)->required();
    auto* vj = verify->add_subcommand("join", "join(webs) vs web(shuffle)");
    vj->add_option("--sign", sign_text)->required();
    vj->add_option("--with", with_text, "sign string of the grafted web")->required();
    vj->add_option("--at", at, "boundary position in the first string")->required();
    for (auto* v : {vb, vr, vj}) {
        v->add_option("--threads", threads, "worker count (default: hardware)");
        v->add_flag("--json", as_json, "emit the report as JSON");
    }

    auto* promote = app.add_subcommand("promote", "jeu-de-taquin promotion of a filling");
    promote->add_option("--tableau", tableau_text)->required();

    auto* shuffle_cmd = app.add_subcommand("shuffle", "shuffle one filling into another");
    shuffle_cmd->add_option("--into", tableau_text, "host tableau")->required();
    shuffle_cmd->add_option("--from", with_text, "inserted tableau")->required();
    shuffle_cmd->add_option("--at", at, "value of the host after which the block lands")->required();

    auto* rotate_cmd = app.add_subcommand("rotate", "move boundary vertex 1 to the far end");
    rotate_cmd->add_option("--web", web_path)->required();
    rotate_cmd->add_option("--out", out_path);

    auto* join_cmd = app.add_subcommand("join", "graft one web's boundary into another's");
    join_cmd->add_option("--web", web_path)->required();
    join_cmd->add_option("--with", with_path, "web JSON of the grafted web")->required();
    join_cmd->add_option("--at", at)->required();
    join_cmd->add_option("--out", out_path);

    auto* render_cmd = app.add_subcommand("render", "emit an SVG or TikZ drawing");
    render_cmd->add_option("--web", web_path)->required();
    render_cmd->add_option("--format", format_text, "svg or tikz")->check(CLI::IsMember({"svg", "tikz"}));
    render_cmd->add_option("--scale", scale_text, "positive rational, e.g. 3/2");
    render_cmd->add_flag("--label-depths", label_depths, "annotate boundary gaps with depths");
    render_cmd->add_flag("--no-sign-labels", no_sign_labels, "omit the sign characters");
    render_cmd->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (build->parsed()) {
        write_text(out_path, web_document(tableau_to_web(parse_tableau(tableau_text), parse_signs(sign_text))));
    } else if (invert->parsed()) {
        std::cout << format_tableau(web_to_tableau(load_web(web_path))) << "\n";
    } else if (enumerate->parsed()) {
        sign_string s = parse_signs(sign_text);
        filling_stream stream(s);
        while (auto t = stream.next()) {
            std::cout << format_tableau(*t);
            if (with_webs) std::cout << "\t" << canonical_code(tableau_to_web(*t, s));
            std::cout << "\n";
        }
    } else if (verify->parsed()) {
        verification_report rep;
        if (vb->parsed()) rep = verify_sign(parse_signs(sign_text), threads);
        else if (vr->parsed()) rep = verify_rotation(parse_signs(sign_text), threads);
        else rep = verify_join(parse_signs(sign_text), parse_signs(with_text), at, threads);
        if (as_json) std::cout << report_to_json(rep).dump(2) << "\n";
        else std::cout << report_table(rep) << "\n";
        return rep.success() ? 0 : 1;
    } else if (promote->parsed()) {
        std::cout << format_tableau(jdt_promote(parse_tableau(tableau_text))) << "\n";
    } else if (shuffle_cmd->parsed()) {
        std::cout << format_tableau(shuffle(parse_tableau(with_text), parse_tableau(tableau_text), at)) << "\n";
    } else if (rotate_cmd->parsed()) {
        write_text(out_path, web_document(rotate(load_web(web_path))));
    } else if (join_cmd->parsed()) {
        write_text(out_path, web_document(join(load_web(web_path), load_web(with_path), at)));
    } else if (render_cmd->parsed()) {
        render_spec spec;
        spec.format = format_text == "svg" ? render_spec::output::svg : render_spec::output::tikz;
        spec.scale = parse_scale(scale_text);
        spec.label_depths = label_depths;
        spec.label_signs = !no_sign_labels;
        write_text(out_path, render_web(load_web(web_path), spec));
    }
    return 0;
}

int classify(errc c) {
    switch (c) {
        case errc::internal_invariant:
        case errc::broken_involution:
        case errc::broken_rotation: return 3;
        default: return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const op_error& e) {
        std::cerr << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
        return classify(e.code());
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: BadWebJson: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: InternalInvariant: " << e.what() << "\n";
        return 3;
    }
}
