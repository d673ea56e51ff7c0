from setuptools import find_packages, setup

setup(
    name="abelkit",
    version="0.1.0",
    long_description="abelkit: Abel functions, Julia series and fractional iterates near a parabolic fixed point",
    long_description_content_type="text/markdown",
    packages=find_packages(include=["abelkit", "abelkit.*"]),
    install_requires=["numpy", "pandas", "tqdm", "fsspec", "mpmath"],
    extras_require={"test": ["pytest", "hypothesis"]},
    entry_points={"console_scripts": ["abelkit=abelkit.cli:cli"]},
)
