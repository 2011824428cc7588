from setuptools import find_packages, setup

setup(
    name="wfano-workbench",
    version="1.0.0",
    description="Exact arithmetic workbench for rank-2 weak Fano bundles "
                "on del Pezzo threefolds",
    packages=find_packages(include=["src", "src.*"]),
    py_modules=["main"],
    python_requires=">=3.9",
    install_requires=[
        "numpy",
        "sympy",
        "rich",
        "python-dotenv",
    ],
    extras_require={"test": ["pytest"]},
    entry_points={
        "console_scripts": ["wfano-workbench = main:main"],
    },
)
