#include "geomint/raster.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <string>

namespace geomint {

int BinaryImage::foreground_count() const {
    return static_cast<int>(std::count_if(foreground.begin(), foreground.end(),
                                          [](std::uint8_t v) { return v != 0; }));
}

namespace {

// Skips whitespace and '#' comments, then reads one header token.
std::string next_token(std::istream& in) {
    std::string tok;
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n')
                c = in.get();
        } else if (std::isspace(c)) {
            c = in.get();
        } else {
            break;
        }
    }
    while (c != EOF && !std::isspace(c) && c != '#') {
        tok.push_back(static_cast<char>(c));
        c = in.get();
    }
    if (c != EOF)
        in.unget();
    return tok;
}

int parse_header_int(std::istream& in, const char* what) {
    const std::string tok = next_token(in);
    if (tok.empty())
        throw ImageFormatError(std::string("truncated header: missing ") + what);
    std::size_t pos = 0;
    long value = 0;
    try {
        value = std::stol(tok, &pos);
    } catch (const std::exception&) {
        throw ImageFormatError(std::string("bad header field ") + what + ": '" + tok + "'");
    }
    if (pos != tok.size() || value < 0)
        throw ImageFormatError(std::string("bad header field ") + what + ": '" + tok + "'");
    return static_cast<int>(value);
}

std::uint8_t luminance(int r, int g, int b) {
    // Rec. 601 weighting, rounded to the nearest level.
    const double y = 0.299 * r + 0.587 * g + 0.114 * b;
    const long v = std::lround(y);
    return static_cast<std::uint8_t>(std::clamp(v, 0L, 255L));
}

std::vector<std::uint8_t> read_raw(std::istream& in, std::size_t n) {
    std::vector<std::uint8_t> data(n);
    in.read(reinterpret_cast<char*>(data.data()), static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(in.gcount()) != n)
        throw ImageFormatError("truncated pixel data");
    return data;
}

std::vector<int> read_ascii(std::istream& in, std::size_t n, int maxval) {
    std::vector<int> data;
    data.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const int v = parse_header_int(in, "sample");
        if (v > maxval)
            throw ImageFormatError("sample exceeds maxval");
        data.push_back(v);
    }
    return data;
}

} // namespace

GrayImage decode_pnm(std::istream& in) {
    const std::string magic = next_token(in);
    if (magic != "P2" && magic != "P3" && magic != "P5" && magic != "P6") {
        if (!magic.empty() && static_cast<unsigned char>(magic[0]) == 0x89)
            throw ImageFormatError("PNG input is not supported; convert to PGM");
        throw ImageFormatError("unsupported format (expected P2/P3/P5/P6, got '" + magic + "')");
    }

    const int width = parse_header_int(in, "width");
    const int height = parse_header_int(in, "height");
    if (width < 1 || height < 1)
        throw ImageFormatError("zero-dimension image");
    const int maxval = parse_header_int(in, "maxval");
    if (maxval < 1 || maxval > 255)
        throw ImageFormatError("unsupported maxval (must be 1..255)");

    const std::size_t n = static_cast<std::size_t>(width) * height;
    GrayImage img{width, height, {}};
    img.intensities.reserve(n);

    const bool color = magic == "P3" || magic == "P6";
    if (magic == "P5" || magic == "P6") {
        const int sep = in.get(); // single whitespace byte after maxval
        if (sep == EOF || !std::isspace(sep))
            throw ImageFormatError("missing separator before pixel data");
        const auto raw = read_raw(in, color ? n * 3 : n);
        if (!color) {
            img.intensities.assign(raw.begin(), raw.end());
        } else {
            for (std::size_t i = 0; i < n; ++i)
                img.intensities.push_back(luminance(raw[3 * i], raw[3 * i + 1], raw[3 * i + 2]));
        }
    } else {
        const auto vals = read_ascii(in, color ? n * 3 : n, maxval);
        if (!color) {
            img.intensities.assign(vals.begin(), vals.end());
        } else {
            for (std::size_t i = 0; i < n; ++i)
                img.intensities.push_back(luminance(vals[3 * i], vals[3 * i + 1], vals[3 * i + 2]));
        }
    }
    return img;
}

GrayImage load_image(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ImageIoError("cannot open image file: " + path.string());
    try {
        return decode_pnm(in);
    } catch (const ImageFormatError& e) {
        throw ImageFormatError(path.string() + ": " + e.what());
    }
}

void write_pgm(const GrayImage& img, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ImageIoError("cannot open file for writing: " + path.string());
    out << "P5\n" << img.width << " " << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.intensities.data()),
              static_cast<std::streamsize>(img.intensities.size()));
    if (!out)
        throw ImageIoError("write failed: " + path.string());
}

BinaryImage binarize(const GrayImage& img, std::uint8_t threshold) {
    BinaryImage bin{img.width, img.height, {}};
    bin.foreground.reserve(img.intensities.size());
    for (const std::uint8_t v : img.intensities)
        bin.foreground.push_back(v < threshold ? 1 : 0);
    return bin;
}

PointSet extract_points(const BinaryImage& bin) {
    PointSet points;
    for (int y = 0; y < bin.height; ++y)
        for (int x = 0; x < bin.width; ++x)
            if (bin.is_foreground(x, y))
                points.push_back({static_cast<double>(x), static_cast<double>(y)});
    if (points.empty())
        throw EmptyFigureError("no figure pixels in mask");
    if (points.size() < 2)
        throw DegenerateFigureError("figure has a single pixel; principal axis undefined");
    return points;
}

} // namespace geomint
