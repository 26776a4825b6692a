from setuptools import setup, find_packages


with open('README.rst') as f:
    readme = f.read()

with open('requirements.txt') as f:
    install_requires = [x for x in f.read().split('\n') if x]

setup(
    name='random-axioms-lab',
    version='0.1.0',
    description='Random axioms, probabilistic proof strategies and the proofs they compile to',
    long_description=readme,
    long_description_content_type='text/x-rst',
    license='MIT',
    packages=find_packages(exclude=('tests', 'docs')),

    install_requires=install_requires,
    extras_require={
        'test': ['hypothesis'],
    },

    entry_points={
        "console_scripts": [
            "ral = ral.app:main"
        ]
    },

    classifiers=[
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.6',
        'License :: OSI Approved :: MIT License',
    ],
)
