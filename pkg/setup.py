from setuptools import setup, find_packages

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setup(
    name="bs-decomp",
    version="0.1.0",
    author="Developer",
    author_email="developer@example.com",
    description="Exact Boij-Soederberg decompositions of complete intersection Betti diagrams",
    long_description=long_description,
    long_description_content_type="text/markdown",
    url="https://github.com/example/bs-decomp",
    packages=find_packages(include=["bs_decomp", "bs_decomp.*"]),
    include_package_data=True,
    classifiers=[
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.8",
    install_requires=[
        "pyyaml>=6.0.2",
        "rich>=10.0.0",
        "sympy>=1.9",
        "typer>=0.15.2",
    ],
    extras_require={
        "test": [
            "hypothesis>=6.0.0",
            "pytest>=6.0.0",
            "pytest-cov>=2.12.0",
            "pytest-html>=3.1.0",
        ],
    },
    entry_points={
        "console_scripts": [
            "bs-decomp=bs_decomp.cli:main_cli",
        ],
    },
)
