import pandas as pd
import matplotlib.pyplot as plt

cars = pd.read_csv("data/cars.csv")
means = cars.groupby(["year", "origin"])["mpg"].mean().unstack()
fig, ax = plt.subplots()
for origin in means.columns:
    ax.plot(means.index, means[origin], marker="o", label=origin)
ax.set_title("Mean mpg by year")
ax.set_xlabel("year")
ax.set_ylabel("mean mpg")
ax.legend(title="origin")
plt.show()
