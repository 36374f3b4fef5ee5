#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct Outcome {
    int code = -1;
    std::string out;
};

Outcome dcalc(const std::string& args) {
    const std::string command = std::string(DCALC_BINARY) + " " + args + " 2>/dev/null";
    Outcome result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer{};
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) result.out.append(buffer.data(), n);
    const int status = pclose(pipe);
    result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty()) break;
        std::vector<std::string> cells;
        std::istringstream fields(line);
        std::string cell;
        while (std::getline(fields, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

}  // namespace

TEST_CASE("solve hydrogen prints the tabulated values") {
    const auto r = dcalc("solve --problem hydrogen --lambda 1 --q \"1/sqrt(n)\" --A 1 --b 25");
    REQUIRE(r.code == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 26);
    CHECK(rows[0] == std::vector<std::string>{"n", "x_sum", "x_oracle", "residual"});
    CHECK(rows[1][1] == "0.866025");
    CHECK(rows[2][1] == "2.59808");
    CHECK(rows[3][1] == "4.86821");
    CHECK(rows[4][1] == "6.70353");
}

TEST_CASE("solve relaxation with the exact oracle") {
    const auto r = dcalc("solve --problem relaxation --lambda 0.0625 --q \"1/(n+1)\" --n-max 13 --oracle exact");
    REQUIRE(r.code == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 15);
    CHECK(rows[0][2] == "x_oracle");
    CHECK(rows[5][0] == "4");
    CHECK(rows[5][2] == "2.0625");
}

TEST_CASE("oracle column can be switched off") {
    const auto r = dcalc("solve --problem relaxation --oracle off");
    REQUIRE(r.code == 0);
    CHECK(parse_csv(r.out)[0] == std::vector<std::string>{"n", "x_closed", "residual"});
}

TEST_CASE("custom problem without seeds is a validation error") {
    CHECK(dcalc("solve --problem custom --coeffs 0,0,0,-0.0625 --q \"0\"").code == 2);
    CHECK(dcalc("solve --problem custom --seeds 1").code == 2);
}

TEST_CASE("custom problem with seeds") {
    const auto r = dcalc("solve --problem custom --coeffs 0,0 --seeds 0,0 --q 1 --n-max 5");
    REQUIRE(r.code == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 7);
    CHECK(rows[6][1] == "10");
}

TEST_CASE("invalid input exits with 2") {
    CHECK(dcalc("solve --problem hydrogen --precision 0").code == 2);
    CHECK(dcalc("solve --problem nonsense").code == 2);
    CHECK(dcalc("solve --problem hydrogen --q \"1/(\"").code == 2);
    CHECK(dcalc("").code == 2);
}

TEST_CASE("numerical failure exits with 3") {
    CHECK(dcalc("solve --problem hydrogen --lambda 5").code == 3);
}

TEST_CASE("precision controls significant digits") {
    const auto r = dcalc("solve --problem hydrogen --precision 3 --b 3");
    REQUIRE(r.code == 0);
    CHECK(parse_csv(r.out)[1][1] == "0.866");
}

TEST_CASE("pretty output and plot") {
    const auto r = dcalc("solve --problem hydrogen --b 10 --output pretty --plot");
    REQUIRE(r.code == 0);
    CHECK(r.out.find(',') == std::string::npos);
    CHECK(r.out.find('*') != std::string::npos);
}

TEST_CASE("scan of the free problem") {
    const auto r = dcalc("scan --problem custom --q 0 --b 4");
    REQUIRE(r.code == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == std::vector<std::string>{"k", "lambda", "theta", "abs_xb"});
    CHECK(std::stod(rows[1][1]) == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-5));
    CHECK(std::stod(rows[2][1]) == doctest::Approx(2.0).epsilon(1e-5));
    const auto two = parse_csv(dcalc("scan --problem custom --q 0 --b 2").out);
    REQUIRE(two.size() == 2);
    CHECK(two[1][1] == "2");
}

TEST_CASE("empty scan prints only the header") {
    const auto r = dcalc("scan --problem custom --q 0 --b 4 --lambda-min 0.7 --lambda-max 1.5");
    CHECK(r.code == 0);
    CHECK(r.out == "k,lambda,theta,abs_xb\n");
}

TEST_CASE("config file with flag override") {
    const std::string path = "dcalc_cli_test.conf";
    {
        std::ofstream conf(path);
        conf << "problem=hydrogen\nlambda=1\nb=6\nprecision=4\n";
    }
    const auto r = dcalc("solve --config " + path + " --precision 6");
    REQUIRE(r.code == 0);
    const auto rows = parse_csv(r.out);
    CHECK(rows.size() == 7);
    CHECK(rows[1][1] == "0.866025");
    std::remove(path.c_str());
}

TEST_CASE("compare-tables report columns") {
    const auto r = dcalc("compare-tables --table relaxation_0.0625_reciprocal");
    REQUIRE(r.code == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 15);
    CHECK(rows[0] == std::vector<std::string>{"table", "n", "closed_form", "oracle", "published",
                                              "abs_dev_closed_oracle", "abs_dev_oracle_published",
                                              "rel_dev_oracle_published"});
    CHECK(rows[5][3] == "2.0625");
    CHECK(dcalc("compare-tables --table nope").code == 2);
}

TEST_CASE("verify exit codes") {
    const auto ok = dcalc("verify --group tables");
    CHECK(ok.code == 0);
    CHECK(ok.out.find("[tables]") != std::string::npos);
    CHECK(ok.out.find("1/1 property groups passed") != std::string::npos);
    const auto broken = dcalc("verify --group product-law --inject-fault circle_plus");
    CHECK(broken.code == 1);
    CHECK(broken.out.find("product law") != std::string::npos);
    CHECK(dcalc("verify --group nope").code == 2);
}
